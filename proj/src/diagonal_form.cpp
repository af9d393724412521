#include "wittbundle/diagonal_form.hpp"

#include <algorithm>
#include <sstream>

namespace witt {

DiagonalForm DiagonalForm::of_rationals(const std::vector<Rat>& coeffs) {
    std::vector<SquareClass> entries;
    entries.reserve(coeffs.size());
    for (const Rat& c : coeffs) entries.push_back(SquareClass::of(c));
    return DiagonalForm(std::move(entries));
}

long DiagonalForm::signature() const {
    long s = 0;
    for (const auto& e : entries_) s += e.sign();
    return s;
}

SquareClass DiagonalForm::determinant() const {
    SquareClass d;
    for (const auto& e : entries_) d = d * e;
    return d;
}

SquareClass DiagonalForm::signed_discriminant() const {
    SquareClass d = determinant();
    std::size_t n = entries_.size();
    if ((n * (n - 1) / 2) % 2) d = d.negated();
    return d;
}

DiagonalForm DiagonalForm::concat(const DiagonalForm& o) const {
    std::vector<SquareClass> entries = entries_;
    entries.insert(entries.end(), o.entries_.begin(), o.entries_.end());
    return DiagonalForm(std::move(entries));
}

DiagonalForm DiagonalForm::negated() const {
    std::vector<SquareClass> entries;
    entries.reserve(entries_.size());
    for (const auto& e : entries_) entries.push_back(e.negated());
    return DiagonalForm(std::move(entries));
}

DiagonalForm DiagonalForm::scaled(const SquareClass& a) const {
    std::vector<SquareClass> entries;
    entries.reserve(entries_.size());
    for (const auto& e : entries_) entries.push_back(e * a);
    return DiagonalForm(std::move(entries));
}

DiagonalForm DiagonalForm::sorted() const {
    std::vector<SquareClass> entries = entries_;
    std::sort(entries.begin(), entries.end(),
              [](const SquareClass& a, const SquareClass& b) {
                  if (a.sign() != b.sign()) return a.sign() > b.sign();
                  return abs(a.value()) < abs(b.value());
              });
    return DiagonalForm(std::move(entries));
}

std::string DiagonalForm::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ",";
        os << entries_[i].str();
    }
    return os.str();
}

DiagonalForm parse_form(const std::string& s) {
    std::vector<Rat> coeffs;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        coeffs.push_back(parse_rat(item));
    }
    for (const Rat& c : coeffs)
        if (c == 0) throw DomainError("zero entry in diagonal form");
    return DiagonalForm::of_rationals(coeffs);
}

}  // namespace witt
