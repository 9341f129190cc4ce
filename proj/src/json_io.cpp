#include "totreal/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace totreal {

double round_sig9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::strtod(buf, nullptr);
}

json to_json(const Modulus& q) {
    return q.is_infinite() ? json(nullptr) : json(q.value());
}

json to_json(const CycElem& e) {
    return json{{"q", to_json(e.modulus())}, {"v", e.value_ll()}};
}

json to_json(const Surface& s) {
    return json{{"orientable", s.orientable}, {"genus", s.genus}};
}

json to_json(const IndexClass& c) {
    json coords = json::array();
    for (const CycElem& e : c.coords) coords.push_back(e.value_ll());
    return json{{"q", to_json(c.q)}, {"coords", coords}};
}

namespace {

const char* constraint_name(FactorConstraint fc) {
    switch (fc) {
        case FactorConstraint::Even: return "even";
        case FactorConstraint::Odd: return "odd";
        case FactorConstraint::Ord2Even: return "ord2_even";
        case FactorConstraint::Ord2Odd: return "ord2_odd";
        case FactorConstraint::Zero: return "zero";
    }
    return "?";
}

}  // namespace

json to_json(const IqDescriptor& d) {
    json factors = json::array();
    for (FactorConstraint fc : d.factors) factors.push_back(constraint_name(fc));
    json out{{"q", to_json(d.q)}, {"factors", factors}, {"empty", d.empty()}};
    if (d.finite()) out["cardinality"] = d.cardinality().convert_to<long long>();
    return out;
}

json to_json(const Target& t) {
    switch (t.kind) {
        case TargetKind::C2: return json{{"kind", "C2"}};
        case TargetKind::CP2: return json{{"kind", "CP2"}};
        case TargetKind::CP1xCP1: return json{{"kind", "CP1xCP1"}};
        case TargetKind::CP2Blowup: return json{{"kind", "CP2Blowup"}, {"m", t.m}};
    }
    return json{};
}

json to_json(const DegreeClass& d) {
    return json{{"ring", d.ring == Ring::Z ? "Z" : "Z2"}, {"c", d.c}};
}

json to_json(const Existence& e) {
    return json{{"value", decision_name(e.value)}, {"reason", e.reason}};
}

json to_json(const IndexDegreePair& p) {
    return json{{"index", to_json(p.index)}, {"degree", to_json(p.degree)}};
}

json to_json(const ZSet& z) {
    json out{{"finite", z.finite}};
    if (z.finite) {
        json pairs = json::array();
        for (const IndexDegreePair& p : z.pairs) pairs.push_back(to_json(p));
        out["pairs"] = pairs;
    } else {
        json desc{{"index", to_json(z.index_descriptor)}};
        if (z.degree_coset) {
            json gens = json::array();
            for (const DegreeClass& g : z.degree_coset->generators) gens.push_back(to_json(g));
            desc["degree"] = json{{"base", to_json(z.degree_coset->base)}, {"generators", gens}};
        } else {
            json degrees = json::array();
            for (const DegreeClass& d : z.degree_list) degrees.push_back(to_json(d));
            desc["degree"] = json{{"list", degrees}};
        }
        out["descriptor"] = desc;
    }
    return out;
}

json to_json(const TotalMod2Degree& t) {
    return json{{"d", t.d}, {"s", t.s}};
}

json to_json(const DiophSolution& s) {
    return json{{"d", s.d}, {"q", s.q}, {"s", s.s}, {"r", s.r}, {"ell", s.ell}};
}

json to_json(const Table1& t) {
    const char* columns[] = {"CP2", "CP2#m", "CP1xCP1", "C2"};
    json rows = json::object();
    json o = json::object(), n = json::object(), i = json::object();
    for (int c = 0; c < 4; ++c) {
        o[columns[c]] = t.orientable_embeddable[static_cast<std::size_t>(c)];
        n[columns[c]] = t.nonorientable_embeddable[static_cast<std::size_t>(c)];
        i[columns[c]] = t.immersion[static_cast<std::size_t>(c)];
    }
    rows["orientable_embeddable"] = o;
    rows["nonorientable_embeddable"] = n;
    rows["immersion"] = i;
    return rows;
}

json to_json(const Table2& t) {
    const char* columns[] = {"S^2", "RP^2", "K^2", "K^2#RP^2", "K^2#K^2"};
    json rows = json::array();
    for (const auto& row : t.cells) {
        json r = json::object();
        for (int c = 0; c < Table2::kCols; ++c) {
            const Table2Cell& cell = row[static_cast<std::size_t>(c)];
            r[columns[c]] = cell.present ? to_json(cell.value) : json(nullptr);
        }
        rows.push_back(r);
    }
    return json{{"rows", rows}};
}

json to_json(const MaslovResult& r) {
    json idx = json::array();
    for (const CycElem& e : r.index.coords) idx.push_back(e.value_ll());
    return json{{"index", idx},
                {"residuals", round_sig9(r.residual_max)},
                {"minJ", round_sig9(r.min_abs_j)}};
}

Surface surface_from_json(const json& j) {
    return make_surface(j.at("orientable").get<bool>(), j.at("genus").get<int>());
}

Target target_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "C2") return make_target(TargetKind::C2);
    if (kind == "CP2") return make_target(TargetKind::CP2);
    if (kind == "CP1xCP1") return make_target(TargetKind::CP1xCP1);
    if (kind == "CP2Blowup") return make_target(TargetKind::CP2Blowup, j.at("m").get<int>());
    throw std::invalid_argument("target_from_json: unknown kind");
}

json classify_report(const Surface& s, const Target& t) {
    return json{{"surface", to_json(s)},
                {"target", to_json(t)},
                {"immersion", to_json(immersion_exists(s, t))},
                {"embedding", to_json(embedding_exists(s, t))},
                {"z_set", to_json(z_set(s, t))}};
}

}  // namespace totreal
