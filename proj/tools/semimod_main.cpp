// Command-line front end: loads algebra files on top of the built-in corpus
// and dispatches the decision procedures.
//
// Exit codes: 0 predicate true / success, 1 predicate false (witnesses
// printed), 2 usage or parse error, 3 search cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "semimod/corpus.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw semimod::ShapeError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const semimod::Report& report, bool as_json) {
    if (as_json)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    using namespace semimod;

    CLI::App app{"finite semiring and semimodule workbench"};
    app.require_subcommand(1);

    bool as_json = false;
    std::uint64_t cap = 1'000'000;
    unsigned jobs = 1;
    std::vector<std::string> load_files;
    app.add_flag("--json", as_json, "emit structured reports");
    app.add_option("--cap", cap, "search cap for enumerations")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for parallel searches")->capture_default_str();
    app.add_option("--load", load_files, "algebra file(s) to load before the command");

    auto* cmd_validate = app.add_subcommand("validate", "parse and validate algebra files");
    cmd_validate->fallthrough();
    std::vector<std::string> validate_files;
    cmd_validate->add_option("files", validate_files, "algebra files")->required();

    auto* cmd_subs = app.add_subcommand("subs", "list the subsemimodules of a module");
    cmd_subs->fallthrough();
    std::string subs_mod;
    bool subs_subtractive = false;
    cmd_subs->add_option("module", subs_mod)->required();
    cmd_subs->add_flag("--subtractive", subs_subtractive, "only subtractive ones");

    auto* cmd_hom = app.add_subcommand("hom", "enumerate the linear maps A -> B");
    cmd_hom->fallthrough();
    std::string hom_a, hom_b;
    bool hom_monoid_flag = false;
    cmd_hom->add_option("A", hom_a)->required();
    cmd_hom->add_option("B", hom_b)->required();
    cmd_hom->add_flag("--monoid", hom_monoid_flag, "also report the pointwise-addition monoid");

    auto* cmd_seq = app.add_subcommand("seq", "classify the exactness of a composable pair");
    cmd_seq->fallthrough();
    std::string seq_f, seq_g, seq_dualize;
    cmd_seq->add_option("f", seq_f)->required();
    cmd_seq->add_option("g", seq_g)->required();
    cmd_seq->add_option("--dualize", seq_dualize,
                        "classify the induced pair with these coefficients instead");

    auto* cmd_inj = app.add_subcommand("inj", "decide relative injectivity");
    cmd_inj->fallthrough();
    std::string inj_kind = "plain", inj_i, inj_m;
    std::uint64_t inj_bound = 0;
    bool inj_cancellative = false;
    cmd_inj->add_option("--kind", inj_kind, "plain, i or e")->capture_default_str();
    cmd_inj->add_option("I", inj_i)->required();
    cmd_inj->add_option("M", inj_m, "ambient module; omit with --corpus-bound");
    cmd_inj->add_option("--corpus-bound", inj_bound,
                        "refutation-only absolute mode: try every registered module of "
                        "at most this size (never a positive certificate)");
    cmd_inj->add_flag("--cancellative", inj_cancellative,
                      "restrict the refutation search to cancellative modules "
                      "(targets c-injectivity)");

    auto* cmd_retract = app.add_subcommand("retract", "decide whether N is a retract of M");
    cmd_retract->fallthrough();
    std::string retract_n, retract_m;
    cmd_retract->add_option("N", retract_n)->required();
    cmd_retract->add_option("M", retract_m)->required();

    auto* cmd_corpus = app.add_subcommand("corpus", "replay every built-in verdict");
    cmd_corpus->fallthrough();

    auto* cmd_matrix = app.add_subcommand("matrix-demo", "exact-rational matrix witnesses");
    cmd_matrix->fallthrough();
    std::uint64_t matrix_samples = 1000, matrix_seed = 7;
    cmd_matrix->add_option("--samples", matrix_samples)->capture_default_str();
    cmd_matrix->add_option("--seed", matrix_seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitTrue : kExitUsage;
    }

    const SearchLimits limits{cap, jobs};
    try {
        Registry reg = corpus_registry();
        for (const std::string& path : load_files)
            load_into(reg, parse_algebra(read_file(path)));

        if (cmd_validate->parsed()) {
            for (const std::string& path : validate_files) {
                Registry scratch = corpus_registry();
                try {
                    load_into(scratch, parse_algebra(read_file(path)));
                } catch (const ValidationError& e) {
                    Report r;
                    r.procedure = "validate";
                    r.inputs = {path};
                    r.verdict = false;
                    for (const AxiomViolation& v : e.violations()) {
                        Witness w{v.law, {}};
                        for (std::size_t i = 0; i < v.witness.size(); ++i)
                            w.items.emplace_back("e" + std::to_string(i), v.witness[i]);
                        r.witnesses.push_back(std::move(w));
                    }
                    emit(r, as_json);
                    return kExitFalse;
                }
            }
            Report r;
            r.procedure = "validate";
            r.inputs = validate_files;
            r.verdict = true;
            emit(r, as_json);
            return kExitTrue;
        }

        if (cmd_subs->parsed()) {
            SemimodulePtr m = reg.semimodule(subs_mod);
            auto subs = enumerate_subsemimodules(m, subs_subtractive, limits);
            Report r;
            r.procedure = "enumerate_subsemimodules";
            r.inputs = {subs_mod};
            r.verdict = true;
            r.statistics["count"] = subs.size();
            for (const auto& sub : subs)
                r.witnesses.push_back(
                    Witness{"subsemimodule",
                            {{"members", sub.label()},
                             {"subtractive", sub.subtractive ? "true" : "false"}}});
            emit(r, as_json);
            return kExitTrue;
        }

        if (cmd_hom->parsed()) {
            SemimodulePtr a = reg.semimodule(hom_a), b = reg.semimodule(hom_b);
            Report r;
            r.procedure = "enumerate_homs";
            r.inputs = {hom_a, hom_b};
            r.verdict = true;
            if (hom_monoid_flag) {
                HomMonoid hm = hom_monoid(a, b, limits);
                r.statistics["count"] = hm.homs.size();
                for (const auto& h : hm.homs)
                    r.witnesses.push_back(Witness{"map", {{"images", h.describe()}}});
                r.flags["monoid"] = true;
                r.claim = "pointwise addition makes Hom(" + hom_a + "," + hom_b +
                          ") a commutative monoid over base " + hm.module->over()->name();
            } else {
                auto homs = enumerate_homs(a, b, limits);
                r.statistics["count"] = homs.size();
                for (const auto& h : homs)
                    r.witnesses.push_back(Witness{"map", {{"images", h.describe()}}});
            }
            emit(r, as_json);
            return kExitTrue;
        }

        if (cmd_seq->parsed()) {
            const LinearMap& f = reg.map(seq_f);
            const LinearMap& g = reg.map(seq_g);
            ExactnessGrade grade;
            Report r;
            r.inputs = {seq_f, seq_g};
            if (!seq_dualize.empty()) {
                Dualized dual =
                    dualize_with(SequencePair{f, g}, reg.semimodule(seq_dualize), limits);
                grade = std::move(dual.grade);
                r.procedure = "dualize_with";
                r.inputs.push_back(seq_dualize);
            } else {
                grade = classify_pair(SequencePair{f, g});
                r.procedure = "classify_pair";
            }
            r.flags["chain_complex"] = grade.chain_complex;
            r.flags["proper_exact"] = grade.proper_exact;
            r.flags["semi_exact"] = grade.semi_exact;
            r.flags["quasi_exact"] = grade.quasi_exact;
            r.flags["exact"] = grade.exact;
            r.witnesses = grade.witnesses;
            r.verdict = grade.exact;
            emit(r, as_json);
            return r.verdict ? kExitTrue : kExitFalse;
        }

        if (cmd_inj->parsed()) {
            auto decide = [&](const SemimodulePtr& coeff,
                              const SemimodulePtr& m) -> InjectivityReport {
                if (inj_kind == "plain") return decide_injective(coeff, m, limits);
                if (inj_kind == "i") return decide_i_injective(coeff, m, limits);
                if (inj_kind == "e") return decide_e_injective(coeff, m, limits);
                throw CLI::ValidationError("--kind must be plain, i or e");
            };
            SemimodulePtr coeff = reg.semimodule(inj_i);

            if (inj_bound > 0) {
                if (!inj_m.empty())
                    throw CLI::ValidationError("give either M or --corpus-bound, not both");
                // Absolute injectivity is only refutable by finite search; a
                // clean pass certifies nothing beyond the bound.
                const std::string notion = (inj_cancellative ? std::string("c-") : std::string()) +
                                           (inj_kind == "plain" ? "" : inj_kind + "-") +
                                           "injective";
                Report r;
                r.procedure = "refute_absolute_injectivity";
                r.inputs = {inj_i, "kind=" + inj_kind, "bound=" + std::to_string(inj_bound)};
                if (inj_cancellative) r.inputs.push_back("cancellative-only");
                std::uint64_t tried = 0;
                for (const auto& [name, m] : reg.semimodules) {
                    if (m->over() != coeff->over()) continue;
                    if (static_cast<std::uint64_t>(m->size()) > inj_bound) continue;
                    if (inj_cancellative &&
                        cancellative_subset(*m).size() != static_cast<std::size_t>(m->size()))
                        continue;
                    ++tried;
                    InjectivityReport rep = decide(coeff, m);
                    if (!rep.verdict) {
                        Report inner = rep.to_report(inj_i, name);
                        r.verdict = false;
                        r.claim = inj_i + " is not " + notion + ": refuted against " + name;
                        r.flags["refuted"] = true;
                        r.flags["witness_module_cancellative"] =
                            cancellative_subset(*m).size() ==
                            static_cast<std::size_t>(m->size());
                        r.witnesses.push_back(Witness{"refuting_module", {{"name", name}}});
                        for (auto& w : inner.witnesses) r.witnesses.push_back(std::move(w));
                        r.statistics["modules_tried"] = tried;
                        emit(r, as_json);
                        return kExitFalse;
                    }
                }
                r.verdict = true;
                r.flags["refuted"] = false;
                r.claim = "no refutation of " + notion + " among " + std::to_string(tried) +
                          " registered modules of size at most " + std::to_string(inj_bound) +
                          "; absolute injectivity is NOT certified by this search";
                r.statistics["modules_tried"] = tried;
                emit(r, as_json);
                return kExitTrue;
            }

            if (inj_m.empty()) throw CLI::ValidationError("missing M (or use --corpus-bound)");
            SemimodulePtr m = reg.semimodule(inj_m);
            InjectivityReport rep = decide(coeff, m);
            Report r = rep.to_report(inj_i, inj_m);
            emit(r, as_json);
            return r.verdict ? kExitTrue : kExitFalse;
        }

        if (cmd_retract->parsed()) {
            Report r = is_retract(reg.semimodule(retract_n), reg.semimodule(retract_m), limits);
            emit(r, as_json);
            return r.verdict ? kExitTrue : kExitFalse;
        }

        if (cmd_corpus->parsed()) {
            Report r = run_corpus(limits, false);
            emit(r, as_json);
            return r.verdict ? kExitTrue : kExitFalse;
        }

        if (cmd_matrix->parsed()) {
            Report r = matrix_demo(MatrixDemoOptions{matrix_samples, matrix_seed});
            emit(r, as_json);
            return r.verdict ? kExitTrue : kExitFalse;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const SearchCapExceeded& e) {
        std::cerr << "search cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitFalse;
    } catch (const ShapeError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const UnresolvedReference& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const DuplicateElement& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << e.kind() << ": " << e.what() << "\n";
        return kExitFalse;
    }
    return kExitUsage;
}
