#include "wittbundle/laurent.hpp"

#include <sstream>

namespace witt {

LaurentForm LaurentForm::of(const std::vector<std::pair<Rat, long>>& entries) {
    std::vector<Entry> out;
    out.reserve(entries.size());
    for (const auto& [c, k] : entries) {
        if (c == 0) throw DomainError("zero entry in Laurent form");
        out.push_back({SquareClass::of(c), static_cast<int>(((k % 2) + 2) % 2)});
    }
    return LaurentForm(std::move(out));
}

DiagonalForm LaurentForm::residue0() const {
    std::vector<SquareClass> es;
    for (const auto& e : entries_)
        if (e.exponent == 0) es.push_back(e.coeff);
    return DiagonalForm(std::move(es));
}

DiagonalForm LaurentForm::residue1() const {
    std::vector<SquareClass> es;
    for (const auto& e : entries_)
        if (e.exponent == 1) es.push_back(e.coeff);
    return DiagonalForm(std::move(es));
}

std::string LaurentForm::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ",";
        os << entries_[i].coeff.str() << ":" << entries_[i].exponent;
    }
    return os.str();
}

int laurent_anisotropic_dim(const LaurentForm& f) {
    return static_cast<int>(WittClass::of_form(f.residue0()).norm()) +
           static_cast<int>(WittClass::of_form(f.residue1()).norm());
}

LaurentForm parse_laurent(const std::string& s) {
    std::vector<std::pair<Rat, long>> entries;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("Laurent entry needs coeff:exponent, got '" + item + "'");
        Rat c = parse_rat(item.substr(0, colon));
        std::string es = item.substr(colon + 1);
        try {
            entries.emplace_back(c, std::stol(es));
        } catch (const std::exception&) {
            throw ParseError("bad Laurent exponent '" + es + "'");
        }
    }
    return LaurentForm::of(entries);
}

}  // namespace witt
