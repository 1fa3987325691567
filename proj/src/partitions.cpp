#include "orbitlab/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbitlab {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("Partition: zero part");
        if (i && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts not weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

Partition Partition::parse(const std::string& s) {
    std::vector<std::size_t> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        long v = std::stol(item);
        if (v <= 0) throw std::invalid_argument("Partition: parts must be positive");
        parts.push_back((std::size_t)v);
    }
    if (parts.empty()) throw std::invalid_argument("Partition: empty");
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

std::vector<Partition> Partition::all_of(std::size_t n) {
    std::vector<Partition> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t rest, std::size_t maxp) -> void {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (std::size_t p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Partition Partition::dual() const {
    if (parts_.empty()) return Partition();
    std::vector<std::size_t> d(parts_[0], 0);
    for (std::size_t j = 0; j < parts_[0]; ++j)
        for (auto p : parts_)
            if (p > j) ++d[j];
    return Partition(d);
}

std::size_t Partition::orbit_dim_gl() const {
    std::size_t sq = 0;
    for (auto p : dual().parts()) sq += p * p;
    return n_ * n_ - sq;
}

Partition Partition::collapse() const {
    if (parts_.empty()) throw std::invalid_argument("Partition: collapse of empty");
    std::vector<std::size_t> c;
    if (parts_.size() == 1) {
        if (parts_[0] > 1) c.push_back(parts_[0] - 1);
    } else {
        c.push_back(parts_[0] + parts_[1] - 1);
        for (std::size_t i = 2; i < parts_.size(); ++i) c.push_back(parts_[i]);
        std::sort(c.rbegin(), c.rend());
    }
    return Partition(c);
}

std::vector<std::size_t> Partition::s_values() const {
    std::vector<std::size_t> s(n_);
    std::size_t block = 0, covered = 0;
    for (std::size_t i = 1; i <= n_; ++i) {
        while (covered < i) covered += parts_[block++];
        s[i - 1] = block;
    }
    return s;
}

bool Partition::so_admissible() const {
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (parts_[i] % 2 == 0 && (j - i) % 2 == 1) return false;
        i = j;
    }
    return true;
}

std::size_t Partition::orbit_dim_so() const {
    // dim z_{so_n}(e) = (sum of squared dual parts - #odd parts)/2,
    // so the orbit dimension is n(n-1)/2 minus that.
    std::size_t sq = 0;
    for (auto p : dual().parts()) sq += p * p;
    std::size_t odd = 0;
    for (auto p : parts_)
        if (p % 2 == 1) ++odd;
    return n_ * (n_ - 1) / 2 - (sq - odd) / 2;
}

std::string Partition::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
}

std::size_t ColourPattern::count(Colour c) const {
    std::size_t k = 0;
    for (const auto& row : rows_)
        for (auto x : row)
            if (x == c) ++k;
    return k;
}

std::string ColourPattern::ascii() const {
    std::ostringstream os;
    for (const auto& row : rows_) {
        for (auto c : row)
            os << (c == Colour::White ? 'W' : c == Colour::Red ? 'R' : 'G');
        os << '\n';
    }
    return os.str();
}

std::string ColourPattern::svg() const {
    const int cell = 24;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n_ * cell
       << "\" height=\"" << n_ * cell << "\">\n";
    for (std::size_t m = 0; m < rows_.size(); ++m)
        for (std::size_t p = 0; p < rows_[m].size(); ++p) {
            const char* fill = rows_[m][p] == Colour::White ? "#ffffff"
                               : rows_[m][p] == Colour::Red ? "#cc0000"
                                                            : "#00aa00";
            os << "<rect x=\"" << p * cell << "\" y=\"" << m * cell << "\" width=\""
               << cell << "\" height=\"" << cell << "\" fill=\"" << fill
               << "\" stroke=\"#000000\"/>\n";
        }
    os << "</svg>\n";
    return os.str();
}

std::string ColourPattern::json() const {
    std::ostringstream os;
    os << "{\"n\":" << n_ << ",\"rows\":[";
    for (std::size_t m = 0; m < rows_.size(); ++m) {
        os << (m ? ",[" : "[");
        for (std::size_t p = 0; p < rows_[m].size(); ++p) {
            const char* c = rows_[m][p] == Colour::White ? "white"
                            : rows_[m][p] == Colour::Red ? "red"
                                                         : "green";
            os << (p ? "," : "") << "\"" << c << "\"";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

ColourPattern paint_pattern(const Partition& r) {
    const std::size_t n = r.size();
    std::vector<std::vector<Colour>> rows;
    for (std::size_t m = 0; m < n; ++m) rows.emplace_back(n - m, Colour::White);

    auto paint_below_green = [&](std::size_t row, std::size_t pos0) {
        for (std::size_t m = row + 1; m < n; ++m) {
            if (pos0 >= n - m) break;
            rows[m][pos0] = Colour::Green;
        }
    };
    for (std::size_t stripe = 0; stripe < r.count(); ++stripe) {
        const std::size_t m = stripe;  // stripe k lands in row k
        const std::size_t len = r.parts()[stripe];
        // rightmost box in row m that is not green
        std::size_t q = n - m;  // 1-based position, scanning from the right
        while (q >= 1 && rows[m][q - 1] == Colour::Green) --q;
        if (q < len) throw std::logic_error("paint_pattern: stripe does not fit");
        for (std::size_t p = q; p > q - len; --p) {
            rows[m][p - 1] = Colour::Red;
            paint_below_green(m, p - 1);
        }
    }
    return ColourPattern(n, std::move(rows));
}

ColourPattern closed_form_pattern(const Partition& r) {
    const std::size_t n = r.size();
    const auto s = r.s_values();
    std::vector<std::vector<Colour>> rows;
    for (std::size_t m = 0; m < n; ++m) {
        std::vector<Colour> row(n - m);
        for (std::size_t p = 1; p <= n - m; ++p) {
            const std::size_t i = n - p + 1;  // generator degree
            const std::size_t si = s[i - 1];
            if (m + 1 == si)
                row[p - 1] = Colour::Red;
            else if (m + 1 > si && m + 1 <= i)
                row[p - 1] = Colour::Green;
            else
                row[p - 1] = Colour::White;
        }
        rows.push_back(std::move(row));
    }
    return ColourPattern(n, std::move(rows));
}

}  // namespace orbitlab
