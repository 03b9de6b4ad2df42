#include "tsc/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsc {

json to_json(const DeltaPoly &m) { return m.c; }

DeltaPoly delta_poly_from_json(const json &j) {
    DeltaPoly p;
    p.c = j.get<std::vector<int64_t>>();
    p.trim();
    return p;
}

json to_json(const SignMor &m) {
    json terms = json::array();
    for (auto &[ops, c] : m.terms) {
        std::string s;
        for (auto &op : ops) s += op.kind == 'd' ? std::string("d") : op.kind + std::to_string(op.index);
        terms.push_back({{"ops", s}, {"coeff", c}});
    }
    return terms;
}

SignMor sign_mor_from_json(const json &j) {
    SignMor m;
    for (auto &t : j) {
        std::vector<SignOp> ops;
        const std::string s = t.at("ops").get<std::string>();
        for (size_t i = 0; i < s.size();) {
            char k = s[i++];
            if (k == 'd') {
                ops.push_back({INT_MIN, 'd'});
                continue;
            }
            if (k != 'A' && k != 'V') throw std::invalid_argument("bad sign marker '" + s + "'");
            size_t e = i;
            while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
            ops.push_back({std::stoi(s.substr(i, e - i)), k});
            i = e;
        }
        m.terms[ops] += t.at("coeff").get<int64_t>();
    }
    return m;
}

json to_json(const Morphism &m) {
    json entries = json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) entries.push_back({r, c, m.at(r, c).str()});
    return {{"src", m.src()}, {"tgt", m.tgt()}, {"degree", m.degree()}, {"entries", entries}};
}

Morphism morphism_from_json(int n, const json &j) {
    Morphism m(n, j.at("src").get<BSWord>(), j.at("tgt").get<BSWord>(), j.at("degree").get<int>());
    for (auto &e : j.at("entries")) m.at(e.at(0).get<int>(), e.at(1).get<int>()) = Poly::parse(n, e.at(2).get<std::string>());
    return m;
}

namespace {

template <class A, class Label, class Mor>
json generic_to_json(const Pseudocomplex<A> &P, int n, const std::string &backend, Label label, Mor mor) {
    std::vector<int> order(P.size());
    for (int i = 0; i < P.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto &x = P.summands[a], &y = P.summands[b];
        return std::tie(x.degree, x.id) < std::tie(y.degree, y.id);
    });
    json sums = json::array(), diff = json::array();
    for (int i : order) {
        auto &s = P.summands[i];
        sums.push_back({{"id", s.id}, {"label", label(s.label)}, {"shift", s.shift}, {"degree", s.degree}});
    }
    std::vector<int> rank(P.size());
    for (int r = 0; r < P.size(); ++r) rank[order[r]] = r;
    std::vector<std::pair<std::pair<int, int>, const typename A::Mor *>> entries;
    for (auto &[key, m] : P.d) entries.push_back({{rank[key.first], rank[key.second]}, &m});
    std::sort(entries.begin(), entries.end(), [](auto &a, auto &b) { return a.first < b.first; });
    for (auto &[key, m] : entries)
        diff.push_back({{"from", P.summands[order[key.first]].id}, {"to", P.summands[order[key.second]].id}, {"morphism", mor(*m)}});
    return {{"n", n}, {"backend", backend}, {"summands", sums}, {"diff", diff}};
}

template <class A, class Label, class Mor> Pseudocomplex<A> generic_from_json(A ar, const json &j, Label label, Mor mor) {
    Pseudocomplex<A> P(std::move(ar));
    for (auto &s : j.at("summands"))
        P.add(s.at("id").get<std::string>(), label(s.at("label")), s.at("shift").get<int>(), s.at("degree").get<int>());
    for (auto &e : j.at("diff")) {
        int a = P.find(e.at("from").get<std::string>()), b = P.find(e.at("to").get<std::string>());
        if (a < 0 || b < 0) throw std::invalid_argument("differential refers to an unknown summand");
        P.set(a, b, mor(e.at("morphism")));
    }
    return P;
}

} // namespace

json complex_to_json(const Pseudocomplex<IntArith> &P) {
    return generic_to_json(P, 0, "integer", [](const std::string &l) { return json(l); },
                           [](const DeltaPoly &m) { return to_json(m); });
}

json complex_to_json(const Pseudocomplex<SignArith> &P, int n, const std::string &backend) {
    return generic_to_json(P, n, backend, [](const std::string &l) { return json(l); },
                           [](const SignMor &m) { return to_json(m); });
}

json complex_to_json(const Pseudocomplex<BimodArith> &P) {
    return generic_to_json(P, P.ar.n, "bimodule", [](const BSWord &w) { return json(w); },
                           [](const Morphism &m) { return to_json(m); });
}

Pseudocomplex<IntArith> int_complex_from_json(const json &j) {
    return generic_from_json(IntArith{}, j, [](const json &l) { return l.get<std::string>(); },
                             [](const json &m) { return delta_poly_from_json(m); });
}

Pseudocomplex<SignArith> sign_complex_from_json(const json &j) {
    return generic_from_json(SignArith{}, j, [](const json &l) { return l.get<std::string>(); },
                             [](const json &m) { return sign_mor_from_json(m); });
}

Pseudocomplex<BimodArith> bimod_complex_from_json(const json &j) {
    int n = j.at("n").get<int>();
    return generic_from_json(BimodArith{n}, j, [](const json &l) { return l.get<BSWord>(); },
                             [n](const json &m) { return morphism_from_json(n, m); });
}

json certificate_to_json(const Certificate &c) {
    return {{"theorem", c.theorem}, {"n", c.n}, {"parameters", c.parameters}, {"steps", c.steps}, {"verdict", c.verdict ? "pass" : "fail"}};
}

} // namespace tsc
