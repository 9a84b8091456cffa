#include "berndt/gammapi.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace berndt {

std::string GammaPiExpr::json() const {
    nlohmann::ordered_json root;
    root["terms"] = nlohmann::ordered_json::array();
    for (const auto& [k, c] : terms_) {
        nlohmann::ordered_json t;
        t["coeff"] = c.str_frac();
        t["two_halves"] = std::get<2>(k);
        t["gamma_exp"] = std::get<0>(k);
        t["pi_halves"] = std::get<1>(k);
        root["terms"].push_back(t);
    }
    return root.dump();
}

GammaPiExpr GammaPiExpr::from_json(const std::string& text) {
    auto root = nlohmann::json::parse(text);
    GammaPiExpr e;
    for (const auto& t : root.at("terms")) {
        e.add_term(Rational(t.at("coeff").get<std::string>()),
                   t.at("two_halves").get<int>(),
                   t.at("gamma_exp").get<int>(),
                   t.at("pi_halves").get<int>());
    }
    return e;
}

std::string GammaPiExpr::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        int a = std::get<0>(k), b = std::get<1>(k), tw = std::get<2>(k);
        Rational ac = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        os << ac.str();
        if (tw == 1) os << "*sqrt(2)";
        if (a != 0) os << "*G^" << a;
        if (b != 0) {
            if (b % 2 == 0)
                os << "*pi^" << b / 2;
            else
                os << "*pi^(" << b << "/2)";
        }
    }
    return os.str();
}

} // namespace berndt
