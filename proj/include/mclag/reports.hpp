#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mclag/abelian_group.hpp"
#include "mclag/chain_complex.hpp"
#include "mclag/coinvariants.hpp"
#include "mclag/errors.hpp"
#include "mclag/johnson.hpp"
#include "mclag/presentations.hpp"
#include "mclag/smith.hpp"
#include "mclag/symplectic.hpp"

namespace mclag {

inline std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
    return r;
}

// A recorded literature value. These are never computed by the library and
// every report that uses one flags it.
struct ExternalConstant {
    std::string name;
    FgAbelianGroup value;
    std::string citation;
};

class ExternalRegistry {
public:
    static ExternalRegistry empty() { return ExternalRegistry(); }

    static ExternalRegistry standard() {
        ExternalRegistry reg;
        reg.add({"h2-sl-3", FgAbelianGroup(0, {2, 2}),
                 "van der Kallen: Schur multiplier of SL(3,Z)"});
        reg.add({"h2-sl-4", FgAbelianGroup(0, {2, 2}),
                 "van der Kallen: Schur multiplier of SL(4,Z)"});
        reg.add({"h2-sl-stable", FgAbelianGroup(0, {2}),
                 "stable Schur multiplier of SL(g,Z), g >= 5 (K_2(Z) = Z/2)"});
        reg.add({"h2-sp6", FgAbelianGroup(1, {2}), "Stein: H_2(Sp(6,Z)) = Z + Z/2"});
        reg.add({"h3-sl3", FgAbelianGroup(0, {3, 3, 4, 4}),
                 "Soule: H_3(SL(3,Z)) = (Z/3)^2 + (Z/4)^2"});
        reg.add({"h1-ursp", FgAbelianGroup(0, {2}),
                 "H_1(urSp(2g)) = H_1(GL(g,Z)) = Z/2 (determinant; SL(g,Z) perfect)"});
        reg.add({"psi-splitting", FgAbelianGroup(0, {2}),
                 "genus-3 splitting via the extended Johnson crossed homomorphism "
                 "projected to the top Lagrangian wedge (Morita; Birman-Brendle-Broaddus)"});
        reg.add({"h2-m3-bound", FgAbelianGroup(1, {}),
                 "Korkmaz-Stipsicz: H_2(M_3) is Z or Z + Z/2"});
        return reg;
    }

    void add(ExternalConstant c) { entries_[c.name] = std::move(c); }
    bool has(const std::string& name) const { return entries_.count(name) != 0; }

    const ExternalConstant& get(const std::string& name) const {
        auto it = entries_.find(name);
        if (it == entries_.end()) throw MissingExternalConstant("no external constant: " + name);
        return it->second;
    }

private:
    std::map<std::string, ExternalConstant> entries_;
};

// Why a five-term assembly is allowed to split: either the quotient is free
// (splitting is automatic) or a recorded external fact supplies it.
struct SplitReason {
    enum class Kind { free_quotient, external_fact };
    Kind kind = Kind::free_quotient;
    std::string citation;

    static SplitReason free_quotient() { return SplitReason{}; }
    static SplitReason external(std::string cite) {
        return SplitReason{Kind::external_fact, std::move(cite)};
    }
};

// Assembles the middle term of a low-degree exact sequence
//   0 -> coinv -> H -> quotient -> 0
// as a direct sum, refusing when the quotient has torsion and no external
// splitting fact is supplied.
inline FgAbelianGroup assemble_five_term(const FgAbelianGroup& coinv,
                                         const FgAbelianGroup& quotient, const SplitReason& split) {
    if (split.kind == SplitReason::Kind::free_quotient) {
        if (!quotient.is_torsion_free())
            throw UnjustifiedSplitting("quotient has torsion; a free-quotient split does not apply");
    } else if (split.citation.empty()) {
        throw UnjustifiedSplitting("external splitting fact requires a citation");
    }
    return direct_sum(coinv, quotient);
}

// --- verification reports ----------------------------------------------------

struct Comparison {
    std::string name;
    std::string computed;
    std::string expected;
    std::string provenance; // "stated" | "derived"
    bool pass = false;
};

struct VerificationReport {
    std::string job;
    int genus = 0;
    bool pass = false;
    std::vector<Comparison> comparisons;
    std::vector<ExternalConstant> externals; // inputs taken on record, flagged
    std::vector<std::string> notes;
    double wall_ms = 0.0;
};

struct ExpectedGroup {
    FgAbelianGroup value;
    std::string provenance;
};
struct ExpectedScalar {
    long long value = 0;
    std::string provenance;
};

struct ExpectedEntry {
    std::map<std::string, ExpectedGroup> groups;
    std::map<std::string, ExpectedScalar> scalars;
};

class ExpectedTable {
public:
    void set(const std::string& job, int genus, ExpectedEntry entry) {
        entries_[job][genus] = std::move(entry);
    }
    const ExpectedEntry* find(const std::string& job, int genus) const {
        auto it = entries_.find(job);
        if (it == entries_.end()) return nullptr;
        auto jt = it->second.find(genus);
        return jt == it->second.end() ? nullptr : &jt->second;
    }

    static ExpectedTable standard(int max_genus = 6);

private:
    std::map<std::string, std::map<int, ExpectedEntry>> entries_;
};

inline ExpectedTable ExpectedTable::standard(int max_genus) {
    ExpectedTable t;
    const FgAbelianGroup z2(0, {2});
    const FgAbelianGroup zero;
    for (int g = 3; g <= max_genus; ++g) {
        const std::size_t r = s2l_rank(g);

        ExpectedEntry perfect;
        perfect.groups["h1-presentation"] = {zero, "stated"};
        perfect.groups["h1-trivial-coefficients"] = {zero, "derived"};
        t.set("sl-perfect", g, perfect);

        ExpectedEntry h0;
        h0.groups["h0"] = {zero, "stated"};
        t.set("h0-sl-s2l", g, h0);

        ExpectedEntry h1;
        h1.groups["h1"] = {g == 3 ? z2 : zero, "stated"};
        if (g == 3) {
            h1.scalars["dim-c2"] = {78, "stated"};
            h1.scalars["dim-c1"] = {36, "stated"};
            h1.scalars["dim-c0"] = {6, "stated"};
            h1.scalars["witness-order"] = {2, "stated"};
            h1.scalars["witness-generates"] = {1, "stated"};
        }
        t.set("h1-sl-s2l", g, h1);

        ExpectedEntry wedge2;
        wedge2.groups["coinvariants"] = {g == 3 ? z2 : zero, "stated"};
        if (g == 3) {
            wedge2.scalars["witness-order"] = {2, "stated"};
            wedge2.scalars["witness-generates"] = {1, "stated"};
        }
        t.set("coinv-wedge2-s2l", g, wedge2);

        ExpectedEntry gen;
        gen.scalars["generates-s2l"] = {1, "stated"};
        gen.scalars["wedge-rank"] = {static_cast<long long>(pair_count(r)), "derived"};
        t.set("lagrangian-generation", g, gen);

        ExpectedEntry tor_s2l;
        tor_s2l.groups["coinvariants"] = {g == 3 ? FgAbelianGroup(4, {2, 2, 2})
                                                 : FgAbelianGroup(binom(static_cast<std::size_t>(g), 3) +
                                                                      static_cast<std::size_t>(g),
                                                                  {}),
                                          "stated"};
        t.set("torelli-coinv-s2l", g, tor_s2l);

        ExpectedEntry ilgb;
        ilgb.groups["h1"] = {g == 3 ? FgAbelianGroup(10, {2, 2, 2})
                                    : FgAbelianGroup(binom(static_cast<std::size_t>(g), 3) +
                                                         static_cast<std::size_t>(g) + r,
                                                     {}),
                             "stated"};
        ilgb.scalars["generates-s2l"] = {1, "stated"};
        t.set("h1-ilgb", g, ilgb);

        ExpectedEntry tor_ur;
        tor_ur.groups["coinvariants"] = {g == 3 ? z2 : zero, "stated"};
        if (g == 3) {
            tor_ur.scalars["witness-order"] = {2, "stated"};
            tor_ur.scalars["witness-generates"] = {1, "stated"};
        }
        t.set("torelli-coinv-ursp", g, tor_ur);

        if (g == 3) {
            ExpectedEntry tor_sp;
            tor_sp.groups["coinvariants"] = {zero, "stated"};
            t.set("torelli-coinv-sp", g, tor_sp);
        }

        ExpectedEntry lgb;
        lgb.groups["h1"] = {g == 3 ? FgAbelianGroup(0, {2, 2}) : z2, "stated"};
        t.set("h1-lgb", g, lgb);

        ExpectedEntry prop;
        prop.groups["e01-h0-sl-s2l"] = {zero, "stated"};
        prop.groups["e10-h1-sl"] = {zero, "stated"};
        prop.groups["e11-h1-sl-s2l"] = {g == 3 ? z2 : zero, "stated"};
        prop.groups["e02-coinv-wedge2-s2l"] = {g == 3 ? z2 : zero, "stated"};
        prop.groups["h1-ursp-plus"] = {zero, "stated"};
        FgAbelianGroup h2_expected = g == 3   ? FgAbelianGroup(0, {2, 2, 2, 2})
                                     : g == 4 ? FgAbelianGroup(0, {2, 2})
                                              : z2;
        prop.groups["h2-ursp-plus"] = {h2_expected, "stated"};
        prop.groups["h2-ur"] = {h2_expected, "stated"};
        if (g == 3) prop.groups["h2-m31"] = {FgAbelianGroup(1, {2}), "stated"};
        t.set("prop-ursp-h2", g, prop);
    }
    return t;
}

inline const std::vector<std::string>& job_ids() {
    static const std::vector<std::string> ids = {
        "lagrangian-generation", "torelli-coinv-s2l", "h1-ilgb",  "h0-sl-s2l",
        "h1-sl-s2l",             "coinv-wedge2-s2l",  "prop-ursp-h2",
        "torelli-coinv-ursp",    "torelli-coinv-sp",  "h1-lgb",   "sl-perfect"};
    return ids;
}

// --- shared computations (memoized; all pure in (kind, genus)) ---------------

namespace detail {

template <class T>
const T& memoized(const char* key, int g, T (*compute)(int)) {
    static std::map<std::pair<std::string, int>, T> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto k = std::make_pair(std::string(key), g);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, compute(g)).first;
    return it->second;
}

inline LocalChainComplex compute_sl_s2l_complex(int g) {
    IntRepresentation rep = s2l_representation(g);
    return chain_boundaries(rep.presentation, rep);
}

inline FgAbelianGroup compute_h0_sl_s2l(int g) {
    return cokernel_invariants(memoized("sl-s2l-complex", g, compute_sl_s2l_complex).d1);
}

inline FgAbelianGroup compute_h1_sl_s2l(int g) {
    const LocalChainComplex& cc = memoized("sl-s2l-complex", g, compute_sl_s2l_complex);
    return subquotient(cc.d2, cc.d1);
}

// wedge^2(S^2 L) as a free module acted on through wedge2 of sym2.
inline ActionModule wedge2_s2l_action_module(int g, const std::vector<IntMatrix>& linear_elements) {
    const std::size_t rank = pair_count(s2l_rank(g));
    ActionModule mod;
    mod.free_rank = rank;
    mod.torsion2_rank = 0;
    for (const IntMatrix& a : linear_elements) {
        ActionEndo e;
        e.free_map = wedge2_rep(sym2_of_gl(a));
        e.torsion_from_free = IntMatrix(0, rank);
        e.torsion_map = IntMatrix(0, 0);
        mod.elements.push_back(std::move(e));
    }
    return mod;
}

inline FgAbelianGroup compute_coinv_wedge2_sl(int g) {
    return coinvariants(wedge2_s2l_action_module(g, sl_generator_matrices(g)));
}

inline FgAbelianGroup compute_torelli_coinv_s2l(int g) {
    return coinvariants(torelli_action_module(g, s2l_transvection_generators(g)));
}

inline FgAbelianGroup compute_torelli_coinv_ursp(int g) {
    return coinvariants(torelli_action_module(g, ursp_generators(g)));
}

inline FgAbelianGroup compute_torelli_coinv_sp(int g) {
    std::vector<SpMatrix> gens = ursp_generators(g);
    gens.push_back(sp6_extra_transvection());
    return coinvariants(torelli_action_module(g, gens));
}

// Coordinates of (y1^y2^y3, y1bar y2bar y3bar) in the model at genus 3.
inline std::vector<Int> sp5_witness_coordinates(int g) {
    const Wedge3Basis& basis = wedge3_basis(g);
    TorelliClass c;
    c.g = g;
    c.lattice.assign(basis.size(), 0);
    c.lattice[basis.index(g, g + 1, g + 2)] = 1;
    c.beta = BElement::zero(g);
    return torelli_coordinates(c);
}

} // namespace detail

struct VerifyOptions {
    int max_genus = 6;
    ExternalRegistry registry = ExternalRegistry::standard();
    ExpectedTable expected = ExpectedTable::standard();
};

namespace detail {

struct ReportBuilder {
    VerificationReport& rep;
    const ExpectedEntry* exp;

    void compare_group(const std::string& name, const FgAbelianGroup& computed) {
        Comparison c;
        c.name = name;
        c.computed = computed.to_string();
        if (exp == nullptr || exp->groups.count(name) == 0) {
            c.expected = "(missing expected entry)";
            c.provenance = "missing";
            c.pass = false;
        } else {
            const ExpectedGroup& e = exp->groups.at(name);
            c.expected = e.value.to_string();
            c.provenance = e.provenance;
            c.pass = iso_equal(computed, e.value);
        }
        rep.comparisons.push_back(std::move(c));
    }

    void compare_scalar(const std::string& name, long long computed) {
        Comparison c;
        c.name = name;
        c.computed = std::to_string(computed);
        if (exp == nullptr || exp->scalars.count(name) == 0) {
            c.expected = "(missing expected entry)";
            c.provenance = "missing";
            c.pass = false;
        } else {
            const ExpectedScalar& e = exp->scalars.at(name);
            c.expected = std::to_string(e.value);
            c.provenance = e.provenance;
            c.pass = computed == e.value;
        }
        rep.comparisons.push_back(std::move(c));
    }

    void use_external(const ExternalConstant& c) { rep.externals.push_back(c); }
    void note(std::string n) { rep.notes.push_back(std::move(n)); }
};

inline const ExternalConstant& h2_sl_constant(int g, const ExternalRegistry& reg) {
    if (g == 3) return reg.get("h2-sl-3");
    if (g == 4) return reg.get("h2-sl-4");
    return reg.get("h2-sl-stable");
}

} // namespace detail

// Runs one verification job and compares every computed value against the
// expected table. Missing expected entries fail rather than pass.
inline VerificationReport verify(const std::string& job, int genus,
                                 const VerifyOptions& opt = VerifyOptions()) {
    bool known = false;
    for (const std::string& id : job_ids()) known = known || id == job;
    if (!known) throw UnknownJob("unknown job id: " + job);
    if (genus < 3 || genus > opt.max_genus)
        throw UnsupportedGenus("genus " + std::to_string(genus) + " outside 3.." +
                               std::to_string(opt.max_genus));
    if (job == "torelli-coinv-sp" && genus != 3)
        throw UnsupportedGenus("torelli-coinv-sp is a genus-3 computation");

    VerificationReport rep;
    rep.job = job;
    rep.genus = genus;
    detail::ReportBuilder b{rep, opt.expected.find(job, genus)};
    if (b.exp == nullptr) rep.notes.push_back("no expected entry for this job/genus");

    const auto t0 = std::chrono::steady_clock::now();
    const int g = genus;

    if (job == "sl-perfect") {
        GroupPresentation pres = sl_presentation(g);
        b.compare_group("h1-presentation", abelianized_h1(pres));
        b.compare_group("h1-trivial-coefficients",
                        homology_h1(pres, trivial_representation(pres)));
    } else if (job == "h0-sl-s2l") {
        b.compare_group("h0", detail::memoized("h0-sl-s2l", g, detail::compute_h0_sl_s2l));
    } else if (job == "h1-sl-s2l") {
        const LocalChainComplex& cc =
            detail::memoized("sl-s2l-complex", g, detail::compute_sl_s2l_complex);
        b.compare_group("h1", detail::memoized("h1-sl-s2l", g, detail::compute_h1_sl_s2l));
        if (g == 3) {
            b.compare_scalar("dim-c2", static_cast<long long>(cc.d2.cols()));
            b.compare_scalar("dim-c1", static_cast<long long>(cc.d1.cols()));
            b.compare_scalar("dim-c0", static_cast<long long>(cc.d1.rows()));
            IntRepresentation rep_s2l = s2l_representation(g);
            std::vector<Int> cycle(cc.d1.cols());
            cycle[s2l_index(g, 3, 3)] = 1; // <e12> (x) X_3^2: e12 is generator 0
            CycleClassInfo info = cycle_class_order(rep_s2l.presentation, rep_s2l, cycle);
            b.compare_scalar("witness-order",
                             info.order ? static_cast<long long>(*info.order) : -1);
            b.compare_scalar("witness-generates", info.generates_h1 ? 1 : 0);
        }
    } else if (job == "coinv-wedge2-s2l") {
        b.compare_group("coinvariants",
                        detail::memoized("coinv-wedge2", g, detail::compute_coinv_wedge2_sl));
        if (g == 3) {
            ActionModule mod = detail::wedge2_s2l_action_module(g, sl_generator_matrices(g));
            std::vector<Int> witness(mod.free_rank);
            // X_3^2 ^ X_2^2 = -(X_2^2 ^ X_3^2)
            const std::size_t pair = pair_index(s2l_rank(g), s2l_index(g, 2, 2), s2l_index(g, 3, 3));
            witness[pair] = -1;
            WitnessReport w = coinvariant_witness(mod, witness);
            b.compare_scalar("witness-order", w.order ? static_cast<long long>(*w.order) : -1);
            b.compare_scalar("witness-generates", w.is_generator ? 1 : 0);
            b.note("witness class: -" + wedge2_module(s2l_module(g)).labels[pair]);
        }
    } else if (job == "lagrangian-generation") {
        GenerationReport gr = lagrangian_generation_check(g);
        b.compare_scalar("generates-s2l", gr.generates_s2l ? 1 : 0);
        b.compare_scalar("wedge-rank", static_cast<long long>(gr.wedge_rank));
        b.note("wedge target rank C(" + std::to_string(s2l_rank(g)) + ",2) = " +
               std::to_string(gr.expected_wedge_rank));
    } else if (job == "torelli-coinv-s2l") {
        b.compare_group("coinvariants",
                        detail::memoized("torelli-s2l", g, detail::compute_torelli_coinv_s2l));
    } else if (job == "torelli-coinv-ursp") {
        b.compare_group("coinvariants",
                        detail::memoized("torelli-ursp", g, detail::compute_torelli_coinv_ursp));
        if (g == 3) {
            ActionModule mod = torelli_action_module(g, ursp_generators(g));
            WitnessReport w = coinvariant_witness(mod, detail::sp5_witness_coordinates(g));
            b.compare_scalar("witness-order", w.order ? static_cast<long long>(*w.order) : -1);
            b.compare_scalar("witness-generates", w.is_generator ? 1 : 0);
        }
    } else if (job == "torelli-coinv-sp") {
        b.compare_group("coinvariants",
                        detail::memoized("torelli-sp", g, detail::compute_torelli_coinv_sp));
        b.note("acting set: urSp(6) generators plus one extra symplectic transvection");
    } else if (job == "h1-ilgb") {
        const FgAbelianGroup& coinv =
            detail::memoized("torelli-s2l", g, detail::compute_torelli_coinv_s2l);
        FgAbelianGroup quotient = FgAbelianGroup::free(s2l_rank(g));
        GenerationReport gr = lagrangian_generation_check(g);
        b.compare_scalar("generates-s2l", gr.generates_s2l ? 1 : 0);
        b.compare_group("h1", assemble_five_term(coinv, quotient, SplitReason::free_quotient()));
        b.note("wedge target generation verified (rank " + std::to_string(gr.wedge_rank) +
               "); realization by commuting twist families is a geometric input, not certified "
               "here");
    } else if (job == "h1-lgb") {
        const FgAbelianGroup& coinv =
            detail::memoized("torelli-ursp", g, detail::compute_torelli_coinv_ursp);
        const ExternalConstant& h1ur = opt.registry.get("h1-ursp");
        b.use_external(h1ur);
        SplitReason split = SplitReason::external(h1ur.citation);
        if (g == 3) {
            const ExternalConstant& psi = opt.registry.get("psi-splitting");
            b.use_external(psi);
            split = SplitReason::external(psi.citation);
        }
        b.compare_group("h1", assemble_five_term(coinv, h1ur.value, split));
    } else if (job == "prop-ursp-h2") {
        const FgAbelianGroup& e01 = detail::memoized("h0-sl-s2l", g, detail::compute_h0_sl_s2l);
        FgAbelianGroup e10 = abelianized_h1(sl_presentation(g));
        const FgAbelianGroup& e11 = detail::memoized("h1-sl-s2l", g, detail::compute_h1_sl_s2l);
        const FgAbelianGroup& e02 =
            detail::memoized("coinv-wedge2", g, detail::compute_coinv_wedge2_sl);
        b.compare_group("e01-h0-sl-s2l", e01);
        b.compare_group("e10-h1-sl", e10);
        b.compare_group("e11-h1-sl-s2l", e11);
        b.compare_group("e02-coinv-wedge2-s2l", e02);

        const ExternalConstant& h2sl = detail::h2_sl_constant(g, opt.registry);
        b.use_external(h2sl);

        FgAbelianGroup h1_plus =
            (e01.is_trivial() && e10.is_trivial()) ? FgAbelianGroup() : FgAbelianGroup::free(1);
        b.compare_group("h1-ursp-plus", h1_plus);

        FgAbelianGroup h2_plus;
        if (g >= 4) {
            if (e11.is_trivial() && e02.is_trivial()) h2_plus = h2sl.value;
            b.note("degree-2 column and edge entries vanish; H2 equals the recorded Schur "
                   "multiplier of SL(" + std::to_string(g) + ",Z)");
        } else {
            const ExternalConstant& h2sp6 = opt.registry.get("h2-sp6");
            b.use_external(h2sp6);
            b.use_external(opt.registry.get("h3-sl3"));
            FgAbelianGroup f0 = direct_sum(e02, e11); // Z/4 ruled out by the Sp(6,Z) image
            h2_plus = direct_sum(f0, h2sl.value);
            b.note("the extension of e11 by e02 is split: the e02 generator maps onto the "
                   "torsion of H_2(Sp(6,Z)), ruling out Z/4");
            b.note("differentials out of degree 3 vanish because the extension splits; the "
                   "recorded H_3(SL(3,Z)) value is flagged for completeness");
        }
        b.compare_group("h2-ursp-plus", h2_plus);
        b.compare_group("h2-ur", h2_plus);
        b.note("index-2 comparison: the Z/2 quotient acts trivially on H2 (conjugation by -I at "
               "genus 3), so H2(urSp) = H2(urSp+)");
        if (g == 3) {
            const ExternalConstant& ks = opt.registry.get("h2-m3-bound");
            b.use_external(ks);
            // the computed wedge^2 coinvariant generator attains the recorded
            // Z/2 of H_2(Sp(6,Z)); combined with the recorded bound this pins
            // the genus-3 value
            b.compare_group("h2-m31", direct_sum(ks.value, e02));
        }
    }

    const auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rep.pass = b.exp != nullptr && !rep.comparisons.empty();
    for (const Comparison& c : rep.comparisons) rep.pass = rep.pass && c.pass;
    return rep;
}

// The spectral-sequence bookkeeping report for H1/H2 of the upper-right
// symplectic groups; identical to the corresponding verify job.
inline VerificationReport report_prop_ursp_h2(int genus,
                                              const VerifyOptions& opt = VerifyOptions()) {
    return verify("prop-ursp-h2", genus, opt);
}

inline std::string render_markdown(const VerificationReport& r) {
    std::ostringstream out;
    out << "## " << r.job << " (genus " << r.genus << ") - " << (r.pass ? "PASS" : "FAIL")
        << "\n\n";
    out << "| value | computed | expected | provenance | ok |\n";
    out << "|---|---|---|---|---|\n";
    for (const Comparison& c : r.comparisons)
        out << "| " << c.name << " | " << c.computed << " | " << c.expected << " | "
            << c.provenance << " | " << (c.pass ? "yes" : "NO") << " |\n";
    if (!r.externals.empty()) {
        out << "\nExternal inputs (recorded, not computed):\n";
        for (const ExternalConstant& e : r.externals)
            out << "- " << e.name << " = " << e.value.to_string() << " [" << e.citation << "]\n";
    }
    for (const std::string& n : r.notes) out << "\nNote: " << n << "\n";
    out << "\nWall time: " << r.wall_ms << " ms\n";
    return out.str();
}

} // namespace mclag
