#include "atomkit/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace atomkit {

BigCount binom(long i, long j) {
    if (i < 0)
        throw std::invalid_argument("binom: upper index must be nonnegative");
    if (j < 0 || j > i)
        return 0;
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
    return r;
}

namespace {

BigCount pow2(int e) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

void check_n(int n) {
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
}

} // namespace

BigCount atom_bound(int n, int r) {
    check_n(n);
    if (r < 0 || r > n)
        throw std::invalid_argument("r must satisfy 0 <= r <= n");
    if (r == 0 || r == n)
        return pow2(n) - 1;
    BigCount sum = 1;
    for (int k = 1; k <= r; ++k)
        for (int h = k + 1; h <= k + n - r; ++h)
            sum += binom(n, h) * binom(h, k);
    return sum;
}

BigCount atom_bound_closed(int n, int r) {
    if (n < 2)
        throw std::invalid_argument("closed forms need n >= 2");
    if (r < 1 || r > 3)
        throw std::invalid_argument("closed forms exist for r in {1,2,3}");
    if (r > n - 1)
        throw std::invalid_argument("closed forms need r <= n-1");
    BigCount nn = n;
    switch (r) {
    case 1:
        return nn * pow2(n - 1) - nn + 1;
    case 2:
        return nn * pow2(n - 1) - 2 * nn + (nn * (nn - 1) / 2) * (pow2(n - 2) - 1) + 1;
    default:
        return nn * pow2(n - 1) - (nn * nn + nn) +
               (nn * (nn - 1) * (nn + 4) / 6) * (pow2(n - 3) - 1) + 1;
    }
}

MaxBound max_bound(int n) {
    check_n(n);
    if (n == 1)
        return {0, 1};
    int r = n / 2;
    return {r, atom_bound(n, r)};
}

bool symmetry_check(int n) {
    if (n < 2)
        throw std::invalid_argument("symmetry needs n >= 2");
    for (int r = 1; r <= n - 1; ++r)
        if (atom_bound(n, r) != atom_bound(n, n - r))
            return false;
    return true;
}

std::string decimal_ratio(const BigCount& num, const BigCount& den, int decimals) {
    if (den == 0)
        throw std::invalid_argument("division by zero");
    if (decimals < 0)
        throw std::invalid_argument("negative precision");
    BigCount scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
    // round half up: floor((num * scale * 2 + den) / (2 * den))
    BigCount scaled = (num * scale * 2 + den) / (2 * den);
    std::string digits = scaled.get_str();
    if (decimals == 0)
        return digits;
    if (static_cast<int>(digits.size()) <= decimals)
        digits.insert(digits.begin(), decimals + 1 - digits.size(), '0');
    digits.insert(digits.size() - decimals, ".");
    return digits;
}

std::string growth_ratio(int n, int decimals) {
    if (n < 2)
        throw std::invalid_argument("growth ratio needs n >= 2");
    decimals = std::max(decimals, 6);
    return decimal_ratio(max_bound(n).value, max_bound(n - 1).value, decimals);
}

namespace {

std::string with_separators(const BigCount& v) {
    std::string s = v.get_str();
    for (int pos = static_cast<int>(s.size()) - 3; pos > 0; pos -= 3)
        s.insert(static_cast<std::size_t>(pos), ",");
    return s;
}

} // namespace

std::string render_bound_table(int max_n, bool csv) {
    check_n(max_n);
    int max_r = max_n / 2;

    // cells[r][n-1]; empty string when r > n
    std::vector<std::vector<std::string>> cells(max_r + 1, std::vector<std::string>(max_n));
    std::vector<BigCount> column_max(max_n, 0);
    for (int n = 1; n <= max_n; ++n)
        for (int r = 0; r <= std::min(n, max_r); ++r)
            column_max[n - 1] = std::max(column_max[n - 1], atom_bound(n, r));

    for (int r = 0; r <= max_r; ++r)
        for (int n = 1; n <= max_n; ++n) {
            if (r > n)
                continue;
            BigCount v = atom_bound(n, r);
            std::string text = csv ? v.get_str() : with_separators(v);
            if (!csv && v == column_max[n - 1])
                text += '*';
            cells[r][n - 1] = text;
        }

    std::vector<std::string> max_row(max_n), ratio_row(max_n);
    for (int n = 1; n <= max_n; ++n) {
        BigCount v = max_bound(n).value;
        max_row[n - 1] = csv ? v.get_str() : with_separators(v);
        if (n == 1)
            ratio_row[n - 1] = csv ? "" : "-";
        else if (csv)
            ratio_row[n - 1] = growth_ratio(n);
        else // text mode shows two decimals
            ratio_row[n - 1] = decimal_ratio(max_bound(n).value, max_bound(n - 1).value, 2);
    }

    std::ostringstream out;
    if (csv) {
        out << "n";
        for (int n = 1; n <= max_n; ++n)
            out << ',' << n;
        out << '\n';
        for (int r = 0; r <= max_r; ++r) {
            out << "r=" << r;
            for (int n = 1; n <= max_n; ++n)
                out << ',' << cells[r][n - 1];
            out << '\n';
        }
        out << "max";
        for (const std::string& s : max_row)
            out << ',' << s;
        out << "\nratio";
        for (const std::string& s : ratio_row)
            out << ',' << s;
        out << '\n';
        return out.str();
    }

    // Cells left empty (r > n, ratio at n = 1) are shown as "-".
    for (auto& row : cells)
        for (std::string& cell : row)
            if (cell.empty())
                cell = "-";

    std::vector<std::string> headers(max_n);
    for (int n = 1; n <= max_n; ++n)
        headers[n - 1] = std::to_string(n);
    std::vector<std::size_t> widths(max_n);
    for (int n = 0; n < max_n; ++n) {
        widths[n] = headers[n].size();
        for (int r = 0; r <= max_r; ++r)
            widths[n] = std::max(widths[n], cells[r][n].size());
        widths[n] = std::max({widths[n], max_row[n].size(), ratio_row[n].size()});
    }

    auto emit_row = [&](const std::string& head, const std::vector<std::string>& row) {
        out << head;
        for (std::size_t pad = head.size(); pad < 6; ++pad)
            out << ' ';
        for (int n = 0; n < max_n; ++n) {
            out << ' ';
            for (std::size_t pad = row[n].size(); pad < widths[n]; ++pad)
                out << ' ';
            out << row[n];
        }
        out << '\n';
    };

    emit_row("n", headers);
    for (int r = 0; r <= max_r; ++r)
        emit_row("r=" + std::to_string(r), cells[r]);
    emit_row("max", max_row);
    emit_row("ratio", ratio_row);
    return out.str();
}

} // namespace atomkit
