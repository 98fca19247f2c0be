#include "frobaut/autstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace frobaut {

namespace {

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
    return static_cast<std::int64_t>(
        static_cast<unsigned __int128>(a) * b % static_cast<unsigned __int128>(n));
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
    std::vector<std::int64_t> units;
    for (std::int64_t a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) units.push_back(a);
    if (n == 1) units.push_back(0);
    return units;
}

bool preserves_multiset(std::int64_t lambda, const DecompositionData& data) {
    std::map<std::int64_t, std::int64_t> mult;  // class rep -> multiplicity
    for (const auto& [cls, e] : data.classes) mult[cls.rep] = e;
    for (const auto& [cls, e] : data.classes) {
        std::int64_t image = mul_mod(lambda, cls.rep, data.n);
        auto it = mult.find(canonical_class(image, data.p, data.n).rep);
        if (it == mult.end() || it->second != e) return false;
    }
    return true;
}

StabilizerSubgroup finish_stabilizer(std::int64_t n, std::vector<std::int64_t> elems) {
    StabilizerSubgroup s;
    s.n = n;
    std::sort(elems.begin(), elems.end());
    s.elements = std::move(elems);
    s.order = static_cast<std::int64_t>(s.elements.size());
    s.invariants = abelian_invariants(s.elements, n);
    return s;
}

Nat pow_nat(std::int64_t base, std::int64_t exp) {
    Nat r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

StabilizerSubgroup component_stabilizer(const DecompositionData& data) {
    std::vector<std::int64_t> elems;
    for (auto lambda : units_mod(data.n))
        if (preserves_multiset(lambda, data)) elems.push_back(lambda);
    auto s = finish_stabilizer(data.n, std::move(elems));
    // <p> fixes every class, so it always sits inside Lambda.
    for (auto x : cyclic_subgroup(data.p, data.n))
        if (!std::binary_search(s.elements.begin(), s.elements.end(), x))
            throw std::logic_error("theorem invariant violated: <p> not in stabilizer");
    return s;
}

StabilizerSubgroup global_stabilizer(const std::vector<DecompositionData>& components) {
    if (components.empty()) throw ValidationError("kernel must have at least one component");
    std::vector<std::int64_t> inter = component_stabilizer(components.front()).elements;
    for (size_t i = 1; i < components.size(); ++i) {
        auto next = component_stabilizer(components[i]).elements;
        std::vector<std::int64_t> tmp;
        std::set_intersection(inter.begin(), inter.end(), next.begin(), next.end(),
                              std::back_inserter(tmp));
        inter = std::move(tmp);
    }
    return finish_stabilizer(components.front().n, std::move(inter));
}

FusionData fusion(const StabilizerSubgroup& lambda, const DecompositionData& data) {
    FusionData fd;
    auto p_group = cyclic_subgroup(data.p, data.n);
    std::vector<std::int64_t> inter;
    std::set_intersection(lambda.elements.begin(), lambda.elements.end(), p_group.begin(),
                          p_group.end(), std::back_inserter(inter));
    fd.field_auto_order = static_cast<std::int64_t>(inter.size());
    if (fd.field_auto_order == 0 || lambda.order % fd.field_auto_order != 0)
        throw std::logic_error("theorem invariant violated: |Lambda ∩ <p>| does not divide |Lambda|");
    fd.ell = lambda.order / fd.field_auto_order;

    std::int64_t t = static_cast<std::int64_t>(data.classes.size());
    std::map<std::int64_t, std::int64_t> rep_index;
    for (std::int64_t i = 0; i < t; ++i) rep_index[data.classes[i].first.rep] = i;

    std::vector<bool> used(t, false);
    for (std::int64_t i = 0; i < t; ++i) {
        if (used[i]) continue;
        std::set<std::int64_t> orbit;
        for (auto lam : lambda.elements) {
            std::int64_t image_rep =
                canonical_class(mul_mod(lam, data.classes[i].first.rep, data.n), data.p, data.n).rep;
            auto it = rep_index.find(image_rep);
            if (it == rep_index.end())
                throw std::logic_error("theorem invariant violated: Lambda leaves the class set");
            orbit.insert(it->second);
        }
        std::int64_t e0 = data.classes[i].second;
        for (auto idx : orbit) {
            used[idx] = true;
            if (data.classes[idx].second != e0)
                throw std::logic_error("theorem invariant violated: multiplicity not orbit-constant");
        }
        if (static_cast<std::int64_t>(orbit.size()) != fd.ell)
            throw std::logic_error("theorem invariant violated: orbit size differs from ell");
        fd.orbits.emplace_back(orbit.begin(), orbit.end());
        fd.e_per_orbit.push_back(e0);
    }
    fd.s = static_cast<std::int64_t>(fd.orbits.size());
    if (fd.s * fd.ell != t)
        throw std::logic_error("theorem invariant violated: s * ell != t");
    return fd;
}

Nat centralizer_order(const DecompositionData& data) {
    Nat order = 1;
    for (const auto& [cls, e] : data.classes) order *= gl_order(e, data.p, data.f);
    return order;
}

Nat normalizer_order(const std::vector<DecompositionData>& components,
                     const StabilizerSubgroup& lambda) {
    Nat order = lambda.order;
    for (const auto& data : components) order *= centralizer_order(data);
    return order;
}

std::string structure_string(const AutReport& report) {
    std::ostringstream kernel;
    for (size_t i = 0; i < report.components.size(); ++i) {
        const auto& data = report.components[i].data;
        if (i) kernel << " x ";
        kernel << "C_" << data.p << "^" << data.d;
    }

    if (report.components.size() == 1 && report.components.front().homogeneous) {
        const auto& data = report.components.front().data;
        std::int64_t e = data.classes.front().second;
        Nat q = pow_nat(data.p, data.f);
        std::ostringstream out;
        out << kernel.str() << " : " << (data.f == 1 ? "GL" : "GammaL") << "(" << e << "," << q
            << ")";
        return out.str();
    }

    std::ostringstream glprod;
    bool first = true;
    for (const auto& comp : report.components) {
        Nat q = pow_nat(comp.data.p, comp.data.f);
        for (size_t o = 0; o < comp.fusion.orbits.size(); ++o) {
            if (!first) glprod << " x ";
            first = false;
            glprod << "GL(" << comp.fusion.e_per_orbit[o] << "," << q << ")";
            if (comp.fusion.ell > 1) glprod << "^" << comp.fusion.ell;
        }
    }

    std::ostringstream lam;
    if (report.stabilizer.invariants.empty()) {
        lam << "1";
    } else {
        for (size_t i = 0; i < report.stabilizer.invariants.size(); ++i) {
            if (i) lam << " x ";
            lam << "C" << report.stabilizer.invariants[i];
        }
    }

    std::ostringstream out;
    out << kernel.str() << " : ((" << glprod.str() << ") . [" << lam.str() << "])";
    return out.str();
}

AutReport analyze(const KernelActionSpec& spec) {
    AutReport report;
    report.spec = spec;
    auto components = validate_and_decompose(spec);
    report.stabilizer = global_stabilizer(components);

    report.centralizer_order = 1;
    report.kernel_order = 1;
    for (auto& data : components) {
        ComponentReport cr;
        cr.fusion = fusion(report.stabilizer, data);
        cr.centralizer_order = centralizer_order(data);
        cr.homogeneous = is_homogeneous(data);
        cr.m_irreducible = cr.fusion.s == 1;
        report.centralizer_order *= cr.centralizer_order;
        report.kernel_order *= pow_nat(data.p, data.d);
        for (const auto& note : data.notes) report.notes.push_back(note);
        cr.data = std::move(data);
        report.components.push_back(std::move(cr));
    }
    report.normalizer_order = report.centralizer_order * report.stabilizer.order;
    report.aut_order = report.kernel_order * report.normalizer_order;
    report.structure = structure_string(report);
    return report;
}

Nat aut_order(const KernelActionSpec& spec) { return analyze(spec).aut_order; }

std::string prime_power_complement_report(const KernelActionSpec& spec) {
    if (spec.components.size() != 1) throw ValidationError("not applicable");
    auto nfac = factorize(spec.n);
    if (nfac.size() != 1) throw ValidationError("not applicable");
    auto [q, m] = nfac.front();

    AutReport report = analyze(spec);
    const auto& lam = report.stabilizer;

    std::ostringstream out;
    out << "n = " << spec.n << " = " << q << "^" << m << "\n";
    out << "Lambda = {";
    for (size_t i = 0; i < lam.elements.size(); ++i) out << (i ? "," : "") << lam.elements[i];
    out << "}, order " << lam.order << ", invariant factors [";
    for (size_t i = 0; i < lam.invariants.size(); ++i) out << (i ? "," : "") << lam.invariants[i];
    out << "]\n";

    if (q % 2 == 1) {
        if (lam.invariants.size() > 1)
            throw std::logic_error("theorem invariant violated: Lambda not cyclic for odd q");
        std::int64_t bound = euler_phi(spec.n);  // q^{m-1}(q-1)
        if (bound % lam.order != 0)
            throw std::logic_error("theorem invariant violated: |Lambda| outside cyclic bound");
        out << "q odd: Lambda cyclic, C_f <= Lambda <= C_" << bound << " holds\n";
    } else if (m >= 3) {
        std::int64_t half = std::int64_t(1) << (m - 2);
        bool embeds = lam.invariants.size() <= 2;
        if (lam.invariants.size() == 2)
            embeds = lam.invariants[0] == 2 && half % lam.invariants[1] == 0;
        else if (lam.invariants.size() == 1)
            embeds = half % lam.invariants[0] == 0 || lam.invariants[0] == 2;
        if (!embeds)
            throw std::logic_error("theorem invariant violated: Lambda outside C_2 x C_2^{m-2}");
        out << "q = 2, m >= 3: Lambda embeds in C_2 x C_" << half << "\n";
    } else {
        out << "q = 2, m <= 2: unit group has order " << euler_phi(spec.n) << "\n";
    }
    return out.str();
}

}  // namespace frobaut
