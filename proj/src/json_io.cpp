#include "ratcycle/json_io.hpp"

#include <sstream>

namespace ratcycle {

json int_to_json(const Int& v) { return v.get_str(); }

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    require(j.is_string(), errc::parse_error, "expected integer or decimal string in JSON");
    return Int(j.get<std::string>());
}

json rational_to_json(const Rational& r) {
    return json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

Rational rational_from_json(const json& j) {
    return Rational(int_from_json(j.at("num")), int_from_json(j.at("den")));
}

json composition_to_json(const Composition& c) {
    json steps = json::array();
    for (const AffineStep& s : c.steps())
        steps.push_back(json{{"p", int_to_json(s.p)}, {"k", int_to_json(s.k)}});
    json out{{"q", int_to_json(c.q())}, {"steps", std::move(steps)}};
    if (c.declared_p()) out["p"] = int_to_json(*c.declared_p());
    return out;
}

Composition composition_from_json(const json& j) {
    std::vector<AffineStep> steps;
    for (const json& s : j.at("steps"))
        steps.push_back({int_from_json(s.at("p")), int_from_json(s.at("k"))});
    std::optional<Int> declared_p;
    if (j.contains("p")) declared_p = int_from_json(j.at("p"));
    return Composition(int_from_json(j.at("q")), std::move(steps), std::move(declared_p));
}

json solution_to_json(const Composition& c, const CycleSolution& sol) {
    json u = json::array(), x = json::array();
    for (const Rational& r : sol.U) u.push_back(rational_to_json(r));
    for (const Rational& r : sol.x) x.push_back(rational_to_json(r));
    return json{{"q", int_to_json(c.q())},
                {"n", c.size()},
                {"steps", composition_to_json(c)["steps"]},
                {"prodP", int_to_json(c.p_full())},
                {"D", int_to_json(sol.D)},
                {"U", std::move(u)},
                {"x", std::move(x)},
                {"commonDen", int_to_json(sol.common_den)}};
}

json witness_to_json(const Composition& c, const Witness& w) {
    Int d = discriminant(c);
    Int value = (w.alpha + w.beta * ipow(c.q(), static_cast<unsigned long>(w.b))) / d;
    return json{{"alpha", int_to_json(w.alpha)},
                {"beta", int_to_json(w.beta)},
                {"b", w.b},
                {"certificate", json{{"D", int_to_json(d)}, {"value", int_to_json(value)}}}};
}

json record_to_json(const CycleRecord& rec) {
    return json{{"word", rec.word},
                {"n", rec.n},
                {"m", rec.m},
                {"D", int_to_json(rec.D)},
                {"x0", rational_to_json(rec.x0)},
                {"is_integer", rec.is_integer},
                {"rotation_class", rec.rotation_class}};
}

std::string record_csv_header() { return "word,n,m,D,x0_num,x0_den,is_integer,rotation_class"; }

std::string record_to_csv(const CycleRecord& rec) {
    std::ostringstream out;
    out << rec.word << ',' << rec.n << ',' << rec.m << ',' << rec.D.get_str() << ','
        << rec.x0.num().get_str() << ',' << rec.x0.den().get_str() << ','
        << (rec.is_integer ? "true" : "false") << ',' << rec.rotation_class;
    return out.str();
}

}  // namespace ratcycle
