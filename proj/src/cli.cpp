#include "oplat/cli.hpp"

#include "oplat/decompose.hpp"
#include "oplat/liemod.hpp"
#include "oplat/propsuite.hpp"

namespace oplat {

namespace {

struct CheckList {
    json arr = json::array();
    bool mandatory_failed = false;

    void add(const std::string& name, bool pass, bool mandatory, std::string detail = "") {
        arr.push_back({{"name", name},
                       {"pass", pass},
                       {"mandatory", mandatory},
                       {"detail", std::move(detail)}});
        if (mandatory && !pass) mandatory_failed = true;
    }
};

json pair_to_json(const BilatticePair& p) {
    return {{"p", subspace_to_json(p.p)}, {"q", subspace_to_json(p.q)}};
}

json term_to_json(const Rank1Term& term) {
    return {{"x", vector_to_json(term.x)},
            {"y", vector_to_json(term.y)},
            {"slice", term.slice_index}};
}

const Matrix& require_matrix(const ProblemFile& p) {
    if (!p.matrix) throw InputError("this command requires a \"matrix\" entry");
    return *p.matrix;
}

const Nest& require_nest(const ProblemFile& p) {
    if (!p.nest) throw InputError("this command requires a \"nest\" entry");
    return *p.nest;
}

void cmd_kernel_set(const ProblemFile& p, json& results, CheckList& checks) {
    const Matrix& t = require_matrix(p);
    if (p.nest && p.lattice) throw InputError("provide either \"nest\" or \"lattice\", not both");
    if (!p.nest && !p.lattice)
        throw InputError("this command requires a \"nest\" or \"lattice\" entry");
    bool is_nest = p.nest.has_value();
    SubspaceLattice lattice = is_nest ? p.nest->to_lattice() : *p.lattice;
    KernelAnalysis analysis = analyze_kernel(t, lattice);
    KernelSet ks = is_nest ? kernel_set(analysis, *p.nest) : kernel_set(t, lattice);

    results["dim"] = lattice.ambient_dim();
    results["input"] = is_nest ? "nest" : "lattice";
    std::size_t r = rank(t);
    results["rank"] = r;
    json pairs = json::array();
    for (const auto& e : ks.entries()) {
        json ej = pair_to_json(e.pair);
        ej["source"] = subspace_to_json(e.source);
        pairs.push_back(std::move(ej));
    }
    results["kernel_set"] = std::move(pairs);
    json map = json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        json ej = pair_to_json({analysis.support[i], analysis.annihilator[i]});
        ej["element"] = subspace_to_json(lattice[i]);
        map.push_back(std::move(ej));
    }
    results["kernel_map"] = std::move(map);

    bool in_bil = true;
    for (const auto& e : ks.entries()) in_bil = in_bil && annihilates(e.pair.q, t, e.pair.p);
    checks.add("pairs_in_bilattice", in_bil, true);
    std::string bound_detail =
        std::to_string(ks.size()) + " <= " + std::to_string(r + 1);
    // The cardinality bound is guaranteed over nests; for general lattices it is
    // only monitored.
    checks.add(is_nest ? "cardinality_bound" : "cardinality_bound_monitor",
               ks.size() <= r + 1, is_nest, bound_detail);
    checks.add("totally_ordered", ks.is_totally_ordered(), is_nest);
}

void cmd_bil(const ProblemFile& p, json& results, CheckList& checks) {
    const Matrix& t = require_matrix(p);
    if (!p.nest && !p.lattice)
        throw InputError("this command requires a \"nest\" or \"lattice\" entry");
    SubspaceLattice lattice = p.nest ? p.nest->to_lattice() : *p.lattice;
    Bilattice bil = Bilattice::enumerate(t, lattice);

    results["dim"] = lattice.ambient_dim();
    results["count"] = bil.pairs().size();
    json pairs = json::array();
    for (const auto& bp : bil.pairs()) pairs.push_back(pair_to_json(bp));
    results["pairs"] = std::move(pairs);

    std::size_t n = lattice.ambient_dim();
    Subspace zero = Subspace::zero(n), full = Subspace::full(n);
    checks.add("contains_corners",
               bil.contains({zero, zero}) && bil.contains({zero, full}) &&
                   bil.contains({full, zero}),
               true);
    bool closed = true;
    for (std::size_t i = 0; closed && i < bil.pairs().size(); ++i)
        for (std::size_t j = i; closed && j < bil.pairs().size(); ++j)
            closed = bil.contains(pair_join(bil.pairs()[i], bil.pairs()[j])) &&
                     bil.contains(pair_meet(bil.pairs()[i], bil.pairs()[j]));
    checks.add("closed_under_join_meet", closed, true);
    bool annihilation = true;
    for (const auto& bp : bil.pairs()) annihilation = annihilation && annihilates(bp.q, t, bp.p);
    checks.add("pairs_annihilate", annihilation, true);
}

void cmd_decompose(const ProblemFile& p, json& results, CheckList& checks) {
    const Matrix& t = require_matrix(p);
    const Nest& nest = require_nest(p);
    Decomposition d = decompose(t, nest);

    results["dim"] = nest.ambient_dim();
    results["rank"] = rank(t);
    results["slice_count"] = d.slices.size();
    results["term_count"] = d.terms.size();
    results["initial_support"] = subspace_to_json(d.initial_support);
    json pairs = json::array();
    for (const auto& e : d.kernel.entries()) {
        json ej = pair_to_json(e.pair);
        ej["source"] = subspace_to_json(e.source);
        pairs.push_back(std::move(ej));
    }
    results["kernel_set"] = std::move(pairs);
    json slices = json::array();
    for (const auto& s : d.slices)
        slices.push_back({{"support_prev", subspace_to_json(s.support_prev)},
                          {"support", subspace_to_json(s.support)},
                          {"annihilator", subspace_to_json(s.annihilator)},
                          {"matrix", matrix_to_json(s.matrix)}});
    results["slices"] = std::move(slices);
    json terms = json::array();
    for (const auto& term : d.terms) terms.push_back(term_to_json(term));
    results["terms"] = std::move(terms);

    for (const auto& c : verify_decomposition(d, nest).checks)
        checks.add(c.name, c.pass, c.mandatory, c.detail);
}

void cmd_lie_closure(const ProblemFile& p, json& results, CheckList& checks) {
    if (p.generators.empty()) throw InputError("this command requires \"generators\"");
    const Nest& nest = require_nest(p);
    OperatorSpace module = lie_module_closure(p.generators, nest);
    OperatorSpace algebra = nest_algebra(nest);

    results["dim"] = nest.ambient_dim();
    results["module_dim"] = module.dim();
    results["algebra_dim"] = algebra.dim();
    json basis = json::array();
    for (const auto& m : module.basis()) basis.push_back(matrix_to_json(m));
    results["basis"] = std::move(basis);
    // An optional probe operator: report whether the closure picked it up.
    if (p.matrix) results["contains_matrix"] = module.contains(*p.matrix);

    bool contains_generators = true;
    for (const auto& g : p.generators)
        contains_generators = contains_generators && module.contains(g);
    checks.add("contains_generators", contains_generators, true);
    bool closed = true;
    for (const auto& m : module.basis())
        for (const auto& a : algebra.basis()) closed = closed && module.contains(lie_bracket(m, a));
    checks.add("bracket_closure", closed, true);
    checks.add("reclosure_idempotent", lie_module_closure(module.basis(), nest) == module, true);
}

void cmd_decomposable(const ProblemFile& p, json& results, CheckList& checks,
                      std::uint64_t seed, int samples) {
    const Matrix& t = require_matrix(p);
    const Nest& nest = require_nest(p);
    if (p.generators.empty()) throw InputError("this command requires \"generators\"");
    OperatorSpace module = lie_module_closure(p.generators, nest);
    if (!module.contains(t))
        throw InputError("the operator does not lie in the generated Lie module");
    DecomposabilityVerdict verdict = check_decomposable(t, module, nest, seed, samples, p.field);

    results["dim"] = nest.ambient_dim();
    results["module_dim"] = module.dim();
    results["status"] = decomposability_name(verdict.status);
    results["certificate"] = verdict.certificate;
    results["seed"] = verdict.seed;
    results["samples"] = verdict.samples;
    json witness = json::array();
    for (const auto& term : verdict.witness) witness.push_back(term_to_json(term));
    results["witness"] = std::move(witness);

    bool witness_iff = (verdict.status == Decomposability::Decomposable) ==
                       (!verdict.witness.empty() || t.is_zero());
    checks.add("witness_iff_decomposable", witness_iff, true);
    if (verdict.status == Decomposability::Decomposable) {
        Matrix sum = Matrix::zero(nest.ambient_dim(), nest.ambient_dim());
        bool members = true;
        for (const auto& term : verdict.witness) {
            Matrix r = outer(term.x, term.y);
            members = members && module.contains(r) && rank(r) == 1;
            sum += r;
        }
        checks.add("witness_valid", members && sum == t, true);
    }
}

void cmd_check_invariants(json& results, CheckList& checks, std::uint64_t seed, int samples) {
    results["seed"] = seed;
    results["cases_per_property"] = samples;
    json props = json::array();
    for (const auto& r : run_property_suite(seed, samples)) {
        props.push_back({{"name", r.name},
                         {"cases", r.cases},
                         {"violations", r.violations},
                         {"skipped", r.skipped},
                         {"detail", r.detail}});
        checks.add(r.name, r.pass(), true,
                   std::to_string(r.violations) + " violations in " +
                       std::to_string(r.cases) + " cases");
    }
    results["properties"] = std::move(props);
}

}  // namespace

CommandResult run_command(const std::string& command, const std::string& file_bytes,
                          const CliOptions& options) {
    json parsed;
    try {
        parsed = json::parse(file_bytes);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    ProblemFile problem = problem_from_json(parsed, options.field);
    std::uint64_t seed = options.seed.value_or(problem.seed.value_or(0));
    int samples = options.samples.value_or(problem.samples.value_or(64));

    json report;
    report["command"] = command;
    report["inputs_digest"] = input_digest(file_bytes);
    json results;
    results["field"] = field_name(problem.field);
    CheckList checks;

    try {
        if (command == "kernel-set") {
            cmd_kernel_set(problem, results, checks);
        } else if (command == "bil") {
            cmd_bil(problem, results, checks);
        } else if (command == "decompose") {
            cmd_decompose(problem, results, checks);
        } else if (command == "lie-closure") {
            cmd_lie_closure(problem, results, checks);
        } else if (command == "decomposable") {
            cmd_decomposable(problem, results, checks, seed, samples);
        } else if (command == "check-invariants") {
            cmd_check_invariants(results, checks, seed, samples);
        } else {
            throw InputError("unknown command '" + command + "'");
        }
    } catch (const std::invalid_argument& e) {
        // Library-level precondition violations are input errors here.
        throw InputError(e.what());
    }

    report["results"] = std::move(results);
    report["checks"] = std::move(checks.arr);
    return {std::move(report), checks.mandatory_failed ? 1 : 0};
}

}  // namespace oplat
