#include "schubfact/json_io.hpp"

#include <stdexcept>

namespace schubfact {

Json to_json(const Permutation& w)
{
    Json out = Json::array();
    for (int v : w.word())
        out.push_back(v);
    return out;
}

Json to_json(const Composition& mu)
{
    Json out = Json::array();
    for (int p : mu.parts())
        out.push_back(p);
    return out;
}

namespace {

Json space_json(const VariableSpace& space)
{
    Json mu = Json::array();
    for (int p : space.mu())
        mu.push_back(p);
    return Json{{"n", space.n()}, {"s", space.blocks()}, {"mu", mu}};
}

} // namespace

Json to_json(const Polynomial& f)
{
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) {
        Json exp = Json::array();
        for (const auto& [v, e] : m.entries())
            exp.push_back(Json::array({f.space().name(v), e}));
        terms.push_back(Json{{"exp", exp}, {"coeff", c.get_str()}});
    }
    return Json{{"space", space_json(f.space())}, {"terms", terms}};
}

Json to_json(const FactoredPolynomial& f)
{
    Json factors = Json::array();
    for (const auto& [form, mult] : f.factors())
        factors.push_back(Json{{"form", linear_form_to_string(form)}, {"power", mult}});
    return Json{{"scalar", f.scalar().get_str()}, {"factors", factors}, {"text", f.to_string()}};
}

Json to_json(const SchubertExpansion& e)
{
    Json terms = Json::array();
    for (const auto& [w, c] : e.coeffs)
        terms.push_back(Json{{"perm", to_json(w)}, {"coeff", c.get_str()}});
    return Json{{"n", e.n}, {"terms", terms}};
}

Json to_json(const WSet& w)
{
    Json members = Json::array();
    for (const Permutation& p : w.members)
        members.push_back(to_json(p));
    return Json{{"family", to_string(w.family)}, {"mu", to_json(w.mu)}, {"members", members}};
}

Json to_json(const IdentityReport& r, bool include_timing)
{
    Json out{{"family", to_string(r.family)},
             {"mu", to_json(r.mu)},
             {"kind", r.kind},
             {"verdict", r.pass ? "pass" : "fail"},
             {"degree", r.degree},
             {"lhs_degree", r.lhs_degree},
             {"support", r.lhs_support_size},
             {"checks", r.checks}};
    if (r.witness)
        out["witness"] = Json{{"monomial", r.witness->monomial},
                              {"lhs", r.witness->lhs.get_str()},
                              {"rhs", r.witness->rhs.get_str()}};
    else
        out["witness"] = nullptr;
    out["flags"] = r.flags;
    if (include_timing)
        out["ms"] = r.ms;
    return out;
}

Json to_json(const SweepResult& s, bool include_timing)
{
    Json reports = Json::array();
    std::size_t passed = 0;
    for (const auto& r : s.reports) {
        reports.push_back(to_json(r, include_timing));
        passed += r.pass ? 1 : 0;
    }
    Json known = Json::array();
    for (const auto& r : s.known_discrepancies)
        known.push_back(to_json(r, include_timing));
    return Json{{"family", to_string(s.family)},
                {"n", s.n},
                {"reports", reports},
                {"known_discrepancies", known},
                {"summary",
                 Json{{"total", s.reports.size()}, {"passed", passed}, {"verdict", s.all_pass() ? "pass" : "fail"}}}};
}

Permutation permutation_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("permutation JSON must be an array");
    return Permutation(j.get<std::vector<int>>());
}

Composition composition_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("composition JSON must be an array");
    return Composition(j.get<std::vector<int>>());
}

Polynomial polynomial_from_json(const Json& j)
{
    try {
        const Json& sp = j.at("space");
        const int n = sp.at("n").get<int>();
        const auto mu = sp.at("mu").get<std::vector<int>>();
        SpacePtr space = mu.empty() ? VariableSpace::make(n) : VariableSpace::make(Composition(mu));
        if (space->n() != n)
            throw std::invalid_argument("space n does not match mu");
        Polynomial out(space);
        for (const Json& t : j.at("terms")) {
            std::vector<Monomial::Entry> entries;
            for (const Json& pair : t.at("exp")) {
                VarId v = 0;
                if (pair.at(0).is_string()) {
                    auto found = space->lookup(pair.at(0).get<std::string>());
                    if (!found)
                        throw std::invalid_argument("unknown variable " + pair.at(0).get<std::string>());
                    v = *found;
                } else {
                    const int id = pair.at(0).get<int>();
                    if (id < 0 || id >= space->size())
                        throw std::invalid_argument("variable id out of range");
                    v = static_cast<VarId>(id);
                }
                const int e = pair.at(1).get<int>();
                if (e < 0 || e > 0xFFFF)
                    throw std::invalid_argument("bad exponent");
                entries.emplace_back(v, static_cast<std::uint16_t>(e));
            }
            const Json& cj = t.at("coeff");
            Integer c;
            if (cj.is_string()) {
                if (c.set_str(cj.get<std::string>(), 10) != 0)
                    throw std::invalid_argument("bad coefficient string");
            } else {
                c = cj.get<long>();
            }
            out.add_term(Monomial::from_entries(std::move(entries)), c);
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
    }
}

} // namespace schubfact
