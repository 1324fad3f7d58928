#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lolab/aip.hpp"
#include "lolab/families.hpp"
#include "lolab/hypergraph.hpp"
#include "lolab/minors.hpp"
#include "lolab/polymorph.hpp"
#include "lolab/recolour.hpp"
#include "lolab/relations.hpp"
#include "lolab/structure.hpp"
#include "lolab/subsets.hpp"

// Exit codes: 0 success/conforming, 1 violation/UNSAT, 2 usage, 3 budget.

namespace {

constexpr int kExitOk = 0, kExitViolation = 1, kExitUsage = 2, kExitBudget = 3;

struct Options {
    int arity = 3;
    std::string target = "lo3";
    std::string filter = "all";
    double budget = 1e9;
    std::uint64_t seed = 1;
    std::string input, output;
    std::string format = "text";
};

std::string read_input(const Options& opt) {
    if (opt.input.empty()) throw CLI::ValidationError("--input is required");
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot open input file: " + opt.input);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fnv1a(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) h = (h ^ c) * 0x100000001b3ULL;
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

lolab::Relation3 parse_target(const std::string& name) {
    const auto sized = [&](const std::string& prefix) -> std::optional<int> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        const std::string rest = name.substr(prefix.size());
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        return std::stoi(rest);
    };
    if (const auto k = sized("lo")) return lolab::lo_relation(*k);
    if (const auto k = sized("nae")) return lolab::nae_relation(*k);
    throw CLI::ValidationError("unknown target (expected loK or naeK): " + name);
}

// Emits either human-readable lines or one self-contained record line.
class Reporter {
public:
    Reporter(const Options& opt, std::string command, const std::string& digest)
        : records_(opt.format == "records"), command_(std::move(command)),
          digest_(digest) {
        if (!opt.output.empty()) {
            file_.open(opt.output, std::ios::binary);
            if (!file_)
                throw CLI::ValidationError("cannot open output file: " + opt.output);
        }
    }

    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

    void text(const std::string& line) {
        if (!records_) out() << line << '\n';
    }
    void field(const std::string& key, const std::string& value) {
        payload_ += ' ' + key + '=' + value;
    }
    void finish(const std::string& outcome) {
        if (records_)
            out() << "record cmd=" << command_ << " digest=" << digest_
                  << " outcome=" << outcome << payload_ << '\n';
    }

private:
    bool records_;
    std::string command_, digest_, payload_;
    std::ofstream file_;
};

std::uint64_t budget_of(const Options& opt) {
    return opt.budget < 0 ? 0 : static_cast<std::uint64_t>(opt.budget);
}

int cmd_check(const Options& opt) {
    const std::string raw = read_input(opt);
    const lolab::PolyTable f = lolab::decode_table(raw);
    const lolab::Relation3 target = parse_target(opt.target);
    const lolab::PolyWitness w = lolab::is_polymorphism(f, target);
    Reporter rep(opt, "check", fnv1a(raw));
    rep.field("target", opt.target);
    rep.field("ok", w.ok ? "true" : "false");
    if (w.ok) {
        rep.text("polymorphism: yes (target " + opt.target + ")");
    } else {
        std::ostringstream line;
        line << "polymorphism: no; partition x=" << w.violation->x
             << " y=" << w.violation->y << " z=" << w.violation->z << " values=("
             << w.values[0] << ',' << w.values[1] << ',' << w.values[2] << ')';
        rep.text(line.str());
        rep.field("x", std::to_string(w.violation->x));
        rep.field("y", std::to_string(w.violation->y));
        rep.field("z", std::to_string(w.violation->z));
    }
    rep.finish(w.ok ? "ok" : "violation");
    return w.ok ? kExitOk : kExitViolation;
}

int cmd_enum(const Options& opt) {
    const lolab::Relation3 target = parse_target(opt.target);
    lolab::EnumFilter filter;
    if (opt.filter == "all")
        filter = lolab::EnumFilter::All;
    else if (opt.filter == "no-small-2set")
        filter = lolab::EnumFilter::NoSmall2Set;
    else
        throw CLI::ValidationError("unknown filter: " + opt.filter);
    const lolab::EnumResult res =
        lolab::enumerate_polymorphisms(opt.arity, target, filter, budget_of(opt));
    Reporter rep(opt, "enum", "-");
    for (const lolab::PolyTable& f : res.tables) rep.out() << lolab::encode_table(f);
    rep.text("count " + std::to_string(res.tables.size()) +
             (res.complete ? "" : " (incomplete)"));
    rep.field("count", std::to_string(res.tables.size()));
    rep.field("complete", res.complete ? "true" : "false");
    rep.finish(res.complete ? "ok" : "budget");
    return res.complete ? kExitOk : kExitBudget;
}

int cmd_saturate(const Options& opt) {
    const std::string raw = read_input(opt);
    const lolab::SaturationResult sat = lolab::saturate(lolab::decode_table(raw));
    Reporter rep(opt, "saturate", fnv1a(raw));
    rep.out() << lolab::encode_table(sat.result);
    rep.text("steps " + std::to_string(sat.path.size()));
    rep.text(std::string("pure ") + (sat.pure ? "true" : "false"));
    rep.field("steps", std::to_string(sat.path.size()));
    rep.field("pure", sat.pure ? "true" : "false");
    rep.finish("ok");
    return kExitOk;
}

int cmd_structure(const Options& opt) {
    const std::string raw = read_input(opt);
    const lolab::StructureVerdict v =
        lolab::verify_structure_theorem(lolab::decode_table(raw), budget_of(opt));
    Reporter rep(opt, "structure", fnv1a(raw));
    rep.text(std::string("small-2set ") + (v.has_small_2set ? "true" : "false"));
    if (v.dictating) rep.text("dictator " + std::to_string(*v.dictating));
    if (!v.pure_saturation_dictators.empty()) {
        std::string ds;
        for (int t : v.pure_saturation_dictators)
            ds += (ds.empty() ? "" : ",") + std::to_string(t);
        rep.text("saturation-dictators " + ds);
        rep.field("dictators", ds);
    }
    rep.text(!v.known ? "verdict unknown (budget)"
                      : (v.conforms ? "verdict conforms" : "verdict violation"));
    rep.field("conforms", v.conforms ? "true" : "false");
    rep.finish(!v.known ? "budget" : (v.conforms ? "ok" : "violation"));
    return !v.known ? kExitBudget : (v.conforms ? kExitOk : kExitViolation);
}

int cmd_reconfig(const Options& opt) {
    const lolab::ReconfigReport r = lolab::reconfig_graph(opt.arity, budget_of(opt));
    Reporter rep(opt, "reconfig", "-");
    rep.text("vertices " + std::to_string(r.vertex_count));
    rep.text("surviving " + std::to_string(r.surviving_count));
    rep.text("full-components " + std::to_string(r.full_components));
    bool unique = r.complete;
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        std::ostringstream line;
        line << "component " << i << " size " << r.components[i].size
             << " projections";
        for (int t : r.components[i].projections) line << ' ' << t;
        rep.text(line.str());
        unique = unique && r.components[i].projections.size() == 1;
    }
    rep.field("components", std::to_string(r.components.size()));
    rep.field("unique_projection", unique ? "true" : "false");
    rep.finish(!r.complete ? "budget" : (unique ? "ok" : "violation"));
    return !r.complete ? kExitBudget : (unique ? kExitOk : kExitViolation);
}

int cmd_chain_check(const Options& opt) {
    const lolab::MinorChain chain = lolab::random_chain(opt.seed, opt.arity);
    const lolab::ChainWitness w = lolab::chain_condition(chain);
    Reporter rep(opt, "chain-check", "-");
    rep.field("seed", std::to_string(opt.seed));
    if (w.ok) {
        rep.text("witness i=" + std::to_string(w.i) + " j=" + std::to_string(w.j));
        rep.field("i", std::to_string(w.i));
        rep.field("j", std::to_string(w.j));
    } else {
        rep.text("VIOLATION");
    }
    rep.finish(w.ok ? "ok" : "violation");
    return w.ok ? kExitOk : kExitViolation;
}

int cmd_lemmas(const Options& opt) {
    const auto results = lolab::lemma_suite(opt.arity, budget_of(opt));
    Reporter rep(opt, "lemmas", "-");
    std::uint64_t violations = 0;
    bool complete = true;
    for (const lolab::LemmaResult& r : results) {
        std::ostringstream line;
        line << "lemma " << r.id << " checked " << r.checked << " violations "
             << r.violations << (r.complete ? "" : " (incomplete)");
        rep.text(line.str());
        if (r.first_counterexample)
            rep.text("counterexample " + r.id + ' ' + *r.first_counterexample);
        violations += r.violations;
        complete = complete && r.complete;
    }
    rep.field("violations", std::to_string(violations));
    rep.field("complete", complete ? "true" : "false");
    rep.finish(violations ? "violation" : (complete ? "ok" : "budget"));
    return violations ? kExitViolation : (complete ? kExitOk : kExitBudget);
}

int cmd_reduce(const Options& opt) {
    const std::string raw = read_input(opt);
    const lolab::Hypergraph3 out = lolab::gadget_reduce(lolab::decode_instance(raw));
    Reporter rep(opt, "reduce", fnv1a(raw));
    rep.out() << lolab::encode_instance(out);
    rep.field("vertices", std::to_string(out.vertex_count));
    rep.field("edges", std::to_string(out.edges.size()));
    rep.finish("ok");
    return kExitOk;
}

int cmd_aip(const Options& opt) {
    const std::string raw = read_input(opt);
    const lolab::AipResult res = lolab::aip_pipeline(lolab::decode_instance(raw));
    Reporter rep(opt, "aip", fnv1a(raw));
    if (res.solved) {
        rep.out() << lolab::encode_assignment(res.assignment);
    } else {
        rep.text("NO_INTEGER_SOLUTION");
    }
    rep.field("solved", res.solved ? "true" : "false");
    rep.finish(res.solved ? "ok" : "unsat");
    return res.solved ? kExitOk : kExitViolation;
}

int cmd_zcheck(const Options& opt) {
    const lolab::Relation3 target = parse_target(opt.target);
    const lolab::ZCheckResult res = lolab::z_check(target);
    Reporter rep(opt, "zcheck", "-");
    for (const auto& [x, y] : res.edges)
        rep.text("edge " + std::to_string(x) + ' ' + std::to_string(y));
    const bool nohom = res.verdict == lolab::ZVerdict::NoHomToZTarget;
    rep.text(nohom ? "verdict NO_HOM_TO_Z_TARGET" : "verdict INCONCLUSIVE");
    rep.field("target", opt.target);
    rep.field("verdict", nohom ? "no_hom" : "inconclusive");
    rep.finish(nohom ? "ok" : "inconclusive");
    return nohom ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification laboratory for LO-colouring polymorphisms"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--arity", opt.arity);
        sub->add_option("--target", opt.target);
        sub->add_option("--filter", opt.filter);
        sub->add_option("--budget", opt.budget);
        sub->add_option("--seed", opt.seed);
        sub->add_option("--input", opt.input);
        sub->add_option("--output", opt.output);
        sub->add_option("--format", opt.format)
            ->check(CLI::IsMember({"text", "records"}));
        return sub;
    };

    struct Command {
        const char* name;
        const char* help;
        int (*run)(const Options&);
    };
    const Command commands[] = {
        {"check", "test a table file against a target relation", cmd_check},
        {"enum", "enumerate polymorphisms of a given arity", cmd_enum},
        {"saturate", "saturate a table file", cmd_saturate},
        {"structure", "classify a table against the structure theorem",
         cmd_structure},
        {"reconfig", "reconfiguration graph components", cmd_reconfig},
        {"chain-check", "seeded random minor chain condition", cmd_chain_check},
        {"lemmas", "run the lemma verification suite", cmd_lemmas},
        {"reduce", "gadget-reduce an instance file", cmd_reduce},
        {"aip", "AIP pipeline on an instance file", cmd_aip},
        {"zcheck", "acyclicity certificate for D(target)", cmd_zcheck},
    };
    for (const Command& c : commands) add_common(app.add_subcommand(c.name, c.help));

    try {
        app.parse(argc, argv);
        for (const Command& c : commands)
            if (app.get_subcommand(c.name)->parsed()) return c.run(opt);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const lolab::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
