#include "shadowkit_tools/cli.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "shadowkit/binomial.hpp"
#include "shadowkit/binomial_sum.hpp"
#include "shadowkit/constructions.hpp"
#include "shadowkit/errors.hpp"
#include "shadowkit/extremal.hpp"
#include "shadowkit/inequalities.hpp"
#include "shadowkit/lattice.hpp"
#include "shadowkit/reduction.hpp"
#include "shadowkit/search.hpp"
#include "shadowkit/sweeps.hpp"
#include "shadowkit_tools/json_io.hpp"

namespace shadowkit::cli {

namespace {

using io::Json;
using io::to_json;

struct Outcome {
    Json body;
    bool verdict = true;
};

using Action = std::function<Outcome()>;

constexpr double kConjectureTolerance = 1e-9;

std::vector<std::int64_t> parse_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        out.push_back(ExactInt::parse(item).to_int64());
    }
    return out;
}

Seq parse_seq(const std::string& text) { return Seq(parse_list(text)); }

// "w0,w1,...:level"
Wall parse_wall(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw PreconditionError("wall must be written as heights:level, e.g. 3,2:4");
    return Wall(parse_list(text.substr(0, colon)), ExactInt::parse(text.substr(colon + 1)).to_int64());
}

// "1-2,3-4"
std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw PreconditionError("pairs must be written as i-j,i-j");
        out.emplace_back(static_cast<int>(ExactInt::parse(item.substr(0, dash)).to_int64()),
                         static_cast<int>(ExactInt::parse(item.substr(dash + 1)).to_int64()));
    }
    return out;
}

Json family_summary(const KFamily& f) {
    Json j = {{"size", f.size()}};
    if (!f.empty() && f.k() >= 1) {
        j["shadow_size"] = shadow(f).size();
        j["bound"] = to_json(kk_bound(ExactInt(f.size()), f.k(), 1));
        j["extremal"] = is_extremal(f);
    }
    j["family"] = to_json(f);
    return j;
}

Json element_summary(const KFamily& f, int x) {
    Json j = family_summary(f);
    j["element_report"] = to_json(evaluate_element(f, x));
    return j;
}

struct Globals {
    std::string format = "json";
    bool pretty = false;
    unsigned threads = 1;
    std::uint64_t budget = SearchOptions{}.node_budget;

    [[nodiscard]] SearchOptions search() const { return {budget, threads}; }
};

class Cli {
public:
    Cli() : app_("Exact toolkit for shadows of k-uniform families", "shadowkit") {
        app_.require_subcommand(1);
        app_.fallthrough();
        app_.add_option("--format", g_.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        app_.add_flag("--pretty", g_.pretty, "Indent JSON output");
        app_.add_option("--threads", g_.threads, "Worker threads for sweeps and searches")
            ->envname("SHADOWKIT_THREADS")
            ->check(CLI::Range(1u, 1024u));
        app_.add_option("--budget", g_.budget, "Search-tree node budget");
        add_decompose();
        add_bound();
        add_shadow();
        add_check();
        add_enumerate();
        add_oracle();
        add_construct();
        add_verify();
        add_reduce();
        add_identity();
    }

    int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
        std::reverse(args.begin(), args.end());
        try {
            app_.parse(args);
        } catch (const CLI::ParseError& e) {
            const int code = app_.exit(e, out, err);
            return code == 0 ? kSuccess : kUsage;
        }
        if (!action_) {
            err << "no command given\n";
            return kUsage;
        }
        try {
            const Outcome outcome = action_();
            if (g_.format == "text") {
                out << io::to_text(outcome.body);
            } else {
                out << (g_.pretty ? outcome.body.dump(2) : outcome.body.dump()) << '\n';
            }
            return outcome.verdict ? kSuccess : kVerdictFalse;
        } catch (const PreconditionError& e) {
            err << "precondition: " << e.what() << '\n';
            return kUsage;
        } catch (const OverflowError& e) {
            err << "overflow: " << e.what() << '\n';
            return kResource;
        } catch (const BudgetExceeded& e) {
            err << "budget: " << e.what() << '\n';
            return kResource;
        } catch (const ConvergenceError& e) {
            err << "convergence: " << e.what() << '\n';
            return kResource;
        } catch (const std::invalid_argument& e) {
            err << "invalid argument: " << e.what() << '\n';
            return kUsage;
        } catch (const std::out_of_range& e) {
            err << "out of range: " << e.what() << '\n';
            return kUsage;
        }
    }

private:
    CLI::App* command(CLI::App* parent, const std::string& name, const std::string& description, Action action) {
        CLI::App* sub = parent->add_subcommand(name, description);
        sub->callback([this, action = std::move(action)] { action_ = action; });
        return sub;
    }

    void add_decompose() {
        struct Args {
            std::string m;
            std::int64_t k = 0;
        };
        auto a = std::make_shared<Args>();
        auto* sub = command(&app_, "decompose", "Cascade of m at level k", [a] {
            return Outcome{{{"seq", to_json(decompose(ExactInt::parse(a->m), a->k))}}};
        });
        sub->add_option("m", a->m, "Value")->required();
        sub->add_option("k", a->k, "Level")->required();
    }

    void add_bound() {
        struct Args {
            std::string m;
            std::int64_t k = 0;
            std::int64_t steps = 1;
        };
        auto a = std::make_shared<Args>();
        auto* sub = command(&app_, "bound", "Shadow lower bound for m sets of size k", [a] {
            return Outcome{{{"bound", to_json(kk_bound(ExactInt::parse(a->m), a->k, a->steps))}}};
        });
        sub->add_option("m", a->m, "Family size")->required();
        sub->add_option("k", a->k, "Set size")->required();
        sub->add_option("--iter", a->steps, "Shadow steps");
    }

    void add_shadow() {
        struct Args {
            std::string path;
            int steps = 1;
            int upper = 0;
        };
        auto a = std::make_shared<Args>();
        auto* sub = command(&app_, "shadow", "Shadow or upper shadow of a family", [a] {
            const KFamily f = io::read_family(a->path);
            const KFamily result = a->upper > 0 ? upper_shadow(f, a->upper) : iterated_shadow(f, a->steps);
            return Outcome{{{"size", result.size()}, {"family", to_json(result)}}};
        });
        sub->add_option("--in", a->path, "Family JSON file")->required();
        sub->add_option("--iter", a->steps, "Shadow steps");
        sub->add_option("--upper", a->upper, "Upper shadow steps (replaces --iter)");
    }

    void add_check() {
        struct Args {
            std::string path;
            std::string mode = "both";
            int witness = 0;
            bool chain = false;
            bool compact = false;
        };
        auto a = std::make_shared<Args>();
        auto* sub = command(&app_, "check", "Extremality verdicts for a family", [a] {
            KFamily f = io::read_family(a->path);
            Json j = {{"n", f.n()}, {"k", f.k()}};
            if (a->compact) {
                Compacted c = compact_support(f);
                j["labels"] = c.labels;
                f = std::move(c.family);
            }
            j["size"] = f.size();
            j["shadow_size"] = shadow(f).size();
            j["bound"] = to_json(kk_bound(ExactInt(f.size()), f.k(), 1));
            bool verdict = true;
            const bool extremal = is_extremal(f);
            if (a->mode != "characterize") {
                j["extremal"] = extremal;
                verdict = verdict && extremal;
            }
            if (a->mode != "direct") {
                const CharacterizationReport report = characterize(f);
                j["characterization"] = to_json(report);
                verdict = verdict && report.verdict;
            }
            if (a->witness > 0) {
                const bool certified = certify_by_witness(f, a->witness);
                j["witness"] = {{"certified", certified}, {"report", to_json(evaluate_element(f, a->witness))}};
                verdict = verdict && certified;
            }
            if (a->chain) {
                const bool chain = extremal && shadow_chain_check(f);
                j["chain"] = chain;
                verdict = verdict && chain;
            }
            return Outcome{std::move(j), verdict};
        });
        sub->add_option("--in", a->path, "Family JSON file")->required();
        sub->add_option("--mode", a->mode, "Which verdicts to compute")
            ->check(CLI::IsMember({"direct", "characterize", "both"}));
        sub->add_option("--witness", a->witness, "Certify extremality at one element");
        sub->add_flag("--chain", a->chain, "Check every iterated shadow against its bound");
        sub->add_flag("--compact", a->compact, "Relabel the support onto [s] first");
    }

    struct LayerArgs {
        int n = 0;
        int k = 0;
        std::string m;
    };

    static void add_layer_args(CLI::App* sub, LayerArgs& a) {
        sub->add_option("n", a.n, "Ground size")->required();
        sub->add_option("k", a.k, "Set size")->required();
        sub->add_option("m", a.m, "Family size")->required();
    }

    static EnumerationMethod parse_method(const std::string& name) {
        return name == "exhaustive" ? EnumerationMethod::exhaustive : EnumerationMethod::recursive;
    }

    void add_enumerate() {
        struct Args : LayerArgs {
            bool up_to_iso = false;
            std::string method = "recursive";
        };
        auto a = std::make_shared<Args>();
        auto* sub = command(&app_, "enumerate", "All extremal families of a given size", [this, a] {
            const auto families = enumerate_extremal(a->n, a->k, ExactInt::parse(a->m), a->up_to_iso,
                                                     parse_method(a->method), g_.search());
            Json list = Json::array();
            for (const auto& f : families) list.push_back(to_json(f));
            return Outcome{{{"count", families.size()}, {"families", std::move(list)}}};
        });
        add_layer_args(sub, *a);
        sub->add_flag("--up-to-iso", a->up_to_iso, "One canonical family per isomorphism class");
        sub->add_option("--method", a->method, "Enumeration method")
            ->check(CLI::IsMember({"exhaustive", "recursive"}));
    }

    void add_oracle() {
        auto* oracle = app_.add_subcommand("oracle", "Brute-force oracles");
        oracle->require_subcommand(1);
        auto a = std::make_shared<LayerArgs>();
        auto* sub = command(oracle, "min-shadow", "Minimum shadow size by exhaustive search", [this, a] {
            const ExactInt m = ExactInt::parse(a->m);
            const ExactInt found = brute_force_min_shadow(a->n, a->k, m, g_.search());
            const ExactInt bound = m == 0 ? ExactInt(0) : kk_bound(m, a->k, 1);
            return Outcome{{{"min_shadow", to_json(found)}, {"bound", to_json(bound)}, {"agrees", found == bound}},
                           found == bound};
        });
        add_layer_args(sub, *a);
    }

    void add_construct() {
        auto* construct = app_.add_subcommand("construct", "Explicit families");
        construct->require_subcommand(1);

        auto colex_args = std::make_shared<LayerArgs>();
        auto* colex = command(construct, "colex", "Initial colex segment", [a = colex_args] {
            return Outcome{family_summary(initial_segment(a->n, a->k, ExactInt::parse(a->m)))};
        });
        add_layer_args(colex, *colex_args);

        struct PairArgs {
            int n = 0, k = 0, m = 0, t = 0, r = 0;
            std::string pairs;
            bool arithmetic_only = false;
        };
        auto p = std::make_shared<PairArgs>();
        auto* pairs = command(construct, "forbidden-pairs", "k-sets avoiding a set of pairs", [p] {
            if (!p->pairs.empty()) {
                return Outcome{family_summary(forbidden_pair_family({p->n, p->k, parse_pairs(p->pairs), {}}))};
            }
            Json j = {{"arithmetic", to_json(forbidden_pair_cardinalities(p->k, p->m, p->t, p->r))}};
            if (!p->arithmetic_only) j["materialized"] = family_summary(forbidden_pair_instance(p->k, p->m, p->t, p->r));
            return Outcome{std::move(j)};
        });
        pairs->add_option("--k", p->k, "Set size")->required();
        pairs->add_option("--m", p->m, "Pairs are all pairs inside [m]");
        pairs->add_option("--t", p->t, "Number of k-blocks outside [m]");
        pairs->add_option("--r", p->r, "Regularity of the deleted family");
        pairs->add_option("--n", p->n, "Ground size, with --pairs");
        pairs->add_option("--pairs", p->pairs, "Explicit pairs i-j,i-j on ground --n");
        pairs->add_flag("--arithmetic-only", p->arithmetic_only, "Skip materialization");

        struct ExampleArgs {
            int n = 0, k = 0;
            std::string variant = "b";
        };
        auto e32 = std::make_shared<ExampleArgs>();
        auto* ex32 = command(construct, "example32", "Independence example, variant b or c", [a = e32] {
            const auto variant = a->variant == "b" ? Example32Variant::b : Example32Variant::c;
            return Outcome{element_summary(example_32_family(a->n, a->k, variant), example_32_element(a->n, variant))};
        });
        ex32->add_option("n", e32->n, "Base size")->required();
        ex32->add_option("k", e32->k, "Set size")->required();
        ex32->add_option("--variant", e32->variant, "Variant")->check(CLI::IsMember({"b", "c"}));

        auto e33 = std::make_shared<ExampleArgs>();
        auto* ex33 = command(construct, "example33", "Inclusion example", [a = e33] {
            return Outcome{element_summary(example_33_family(a->n, a->k), example_33_element(a->n))};
        });
        ex33->add_option("n", e33->n, "Base size")->required();
        ex33->add_option("k", e33->k, "Set size")->required();

        auto pert_args = std::make_shared<LayerArgs>();
        auto* perturbed = command(construct, "perturbed", "Colex segment with its last set swapped", [a = pert_args] {
            return Outcome{to_json(perturbed_colex(a->n, a->k, ExactInt::parse(a->m)))};
        });
        add_layer_args(perturbed, *pert_args);
    }

    void add_verify() {
        auto* verify = app_.add_subcommand("verify", "Exhaustive theorem checks");
        verify->require_subcommand(1);

        struct AbcArgs {
            std::int64_t kmax = 5, amax = 10, extra = 1;
            bool general = false;
        };
        auto abc_args = std::make_shared<AbcArgs>();
        auto* abc = command(verify, "lemma-abc", "Split inequality over every valid triple", [this, a = abc_args] {
            const SweepSummary s = a->general ? sweep_lemma_abck(a->kmax, a->amax, a->extra, g_.threads)
                                              : sweep_lemma_abc(a->kmax, a->amax, g_.threads);
            const bool pass = s.violations == 0 && s.propagation_failures == 0;
            return Outcome{{{"kmax", a->kmax}, {"amax", a->amax}, {"general", a->general}, {"summary", to_json(s)},
                            {"pass", pass}},
                           pass};
        });
        abc->add_option("--kmax", abc_args->kmax, "Largest k");
        abc->add_option("--amax", abc_args->amax, "Largest leading term");
        abc->add_flag("--general", abc_args->general, "Check the split into levels k1, k2 >= k");
        abc->add_option("--extra", abc_args->extra, "Levels k1, k2 range over [k, k + extra]");

        struct TripleArgs {
            std::string a, b, c;
            std::int64_t k = 0;
        };
        auto t = std::make_shared<TripleArgs>();
        auto* triple = command(verify, "triple", "Classify one triple (a, b, c)", [t] {
            const AbcReport r = check_abc(parse_seq(t->a), parse_seq(t->b), parse_seq(t->c), t->k);
            return Outcome{to_json(r), r.inequalities_hold()};
        });
        triple->add_option("--a", t->a, "Cascade a, comma separated")->required();
        triple->add_option("--b", t->b, "Sequence b")->required();
        triple->add_option("--c", t->c, "Sequence c");
        triple->add_option("--k", t->k, "Level")->required();

        struct SplitArgs {
            std::int64_t kmax = 5, amax = 8, k = 0;
            std::string a;
        };
        auto sp = std::make_shared<SplitArgs>();
        auto* splits = command(verify, "splits", "Equality splits against exhaustive search", [sp] {
            if (!sp->a.empty()) {
                const Seq a = parse_seq(sp->a);
                auto encode = [](const std::vector<Split>& v) {
                    Json out = Json::array();
                    for (const auto& [b, c] : v) out.push_back({{"b", to_json(b)}, {"c", to_json(c)}});
                    return out;
                };
                const auto formula = equality_splits(a, sp->k);
                const auto exhaustive = exhaustive_equality_splits(a, sp->k);
                return Outcome{{{"formula", encode(formula)}, {"exhaustive", encode(exhaustive)},
                                {"agree", formula == exhaustive}},
                               formula == exhaustive};
            }
            const SplitsSummary s = sweep_splits(sp->kmax, sp->amax);
            const bool pass = s.mismatches == 0 && s.extra_exhaustive == 0 && s.missing_exhaustive == 0;
            return Outcome{{{"kmax", sp->kmax}, {"amax", sp->amax}, {"summary", to_json(s)}, {"pass", pass}}, pass};
        });
        splits->add_option("--kmax", sp->kmax, "Largest k");
        splits->add_option("--amax", sp->amax, "Largest leading term");
        splits->add_option("--a", sp->a, "Single cascade instead of a sweep");
        splits->add_option("--k", sp->k, "Level for --a");

        struct GroundArgs {
            int n = 0, k = 0;
            std::string method = "recursive";
        };
        for (const auto& [name, what] : {std::pair{"min-degree", "Minimum-degree bound over every family"},
                                         std::pair{"characterization", "Characterization against extremality"}}) {
            auto g = std::make_shared<GroundArgs>();
            auto* sub = command(verify, name, what, [this, g] {
                const FamilySweepReport r = sweep_all_families(g->n, g->k, g_.threads);
                return Outcome{to_json(r), r.clean()};
            });
            sub->add_option("n", g->n, "Ground size")->required();
            sub->add_option("k", g->k, "Set size")->required();
        }

        auto u = std::make_shared<GroundArgs>();
        auto* uniq = command(verify, "uniqueness", "Isomorphism class counts against the predicate", [this, u] {
            const auto rows = uniqueness_table(u->n, u->k, parse_method(u->method), g_.search());
            Json list = Json::array();
            bool all = true;
            for (const auto& r : rows) {
                list.push_back(to_json(r));
                all = all && r.agrees();
            }
            return Outcome{{{"rows", std::move(list)}, {"all_agree", all}}, all};
        });
        uniq->add_option("n", u->n, "Ground size")->required();
        uniq->add_option("k", u->k, "Set size")->required();
        uniq->add_option("--method", u->method, "Enumeration method")->check(CLI::IsMember({"exhaustive", "recursive"}));

        struct ConjectureArgs {
            std::int64_t k = 0;
            double xmax = 12;
            double step = 0.25;
            std::size_t samples = 200;
        };
        auto c = std::make_shared<ConjectureArgs>();
        auto* conj = command(verify, "conjecture", "Numeric scan of the real-argument conjecture", [c] {
            if (c->step <= 0) throw PreconditionError("--step must be positive");
            std::vector<double> xs;
            for (std::int64_t i = 0;; ++i) {
                const double x = static_cast<double>(c->k) + static_cast<double>(i) * c->step;
                if (x > c->xmax + 1e-12) break;
                xs.push_back(x);
            }
            const ConjectureReport r = conjecture_scan(c->k, xs, c->samples);
            const bool pass = r.min_slack >= -kConjectureTolerance;
            return Outcome{{{"report", to_json(r)}, {"tolerance", kConjectureTolerance}, {"pass", pass}}, pass};
        });
        conj->add_option("--k", c->k, "Level")->required();
        conj->add_option("--xmax", c->xmax, "Largest x")->required();
        conj->add_option("--step", c->step, "Spacing of x values")->required();
        conj->add_option("--samples", c->samples, "y samples per x");
    }

    void add_reduce() {
        struct Args {
            std::string wall, b, c;
            std::int64_t k = 0;
        };
        auto a = std::make_shared<Args>();
        auto* sub = command(&app_, "reduce", "Run the wall reduction and verify both identities", [a] {
            const Wall w = parse_wall(a->wall);
            const Seq b = parse_seq(a->b);
            const Seq c = parse_seq(a->c);
            const ReductionOutcome out = recursive_reduce(w, b, c, a->k);
            const ReductionCheck check = verify_reduction(w, b, c, a->k, out);
            return Outcome{{{"outcome", to_json(out)}, {"check", to_json(check)}}, check.ok()};
        });
        sub->add_option("--wall", a->wall, "Wall heights and level, e.g. 3,2:4")->required();
        sub->add_option("--b", a->b, "Sequence b")->required();
        sub->add_option("--c", a->c, "Sequence c");
        sub->add_option("--k", a->k, "Level")->required();
    }

    void add_identity() {
        auto* identity = app_.add_subcommand("identity", "Binomial-sum identities");
        identity->require_subcommand(1);
        auto sum = std::make_shared<std::string>();
        auto* sub = command(identity, "check", "Is a binomial sum zero under every translation", [sum] {
            const BinomialSum s = parse_binomial_sum(*sum);
            const bool zero = is_invariantly_zero(s);
            return Outcome{{{"sum", to_string(s)},
                            {"normal_form", to_string(normal_form(s))},
                            {"value", to_json(s.eval())},
                            {"invariantly_zero", zero},
                            {"vanishes_on_grid", vanishes_on_grid(s)}},
                           zero};
        });
        sub->add_option("--sum", *sum, "Sum such as \"C(1,0) - C(0,0)\"")->required();
    }

    CLI::App app_;
    Globals g_;
    Action action_;
};
}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Cli cli;
    return cli.run(args, out, err);
}

}  // namespace shadowkit::cli
