#include "finitype/commands.hpp"

#include "finitype/matrix_io.hpp"
#include "finitype/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace finitype {

std::size_t resolve_oracle_limit(std::size_t from_flag) {
    if (from_flag != 0) return from_flag;
    const char* env = std::getenv("FINITYPE_ORACLE_LIMIT");
    if (env == nullptr || *env == '\0') return default_oracle_limit;
    const std::string text(env);
    if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) || text.size() > 18)
        throw std::invalid_argument("FINITYPE_ORACLE_LIMIT must be a positive integer");
    const std::size_t value = std::stoull(text);
    if (value == 0) throw std::invalid_argument("FINITYPE_ORACLE_LIMIT must be a positive integer");
    return value;
}

namespace {

using report::Json;

class Session {
public:
    Session(std::ostream& out, std::ostream& err, bool json) : out_(out), err_(err), json_(json) {}

    bool json() const { return json_; }
    std::ostream& out() { return out_; }

    void emit(const Json& j, bool compact = false) { out_ << (compact ? j.dump() : j.dump(2)) << '\n'; }

    int fail(const std::string& command, const std::string& file, const std::string& kind,
             const std::string& message, bool compact = false) {
        if (json_) {
            Json j = report::header(command, file);
            j["error"] = {{"kind", kind}, {"message", message}};
            emit(j, compact);
        } else {
            err_ << "error: " << (file.empty() ? "" : file + ": ") << message << '\n';
        }
        return exit_input_error;
    }

    int fail(const std::string& command, const std::string& file, const NotSkewSymmetrizable& e,
             bool compact = false) {
        if (json_) {
            Json j = report::header(command, file);
            j["error"] = report::domain_error(e);
            emit(j, compact);
            return exit_input_error;
        }
        return fail(command, file, "NotSkewSymmetrizable", "matrix is not skew-symmetrizable: " + e.describe());
    }

private:
    std::ostream& out_;
    std::ostream& err_;
    bool json_;
};

// Either a parsed matrix or the exit code of the error already reported.
struct Loaded {
    std::optional<SquareIntMatrix> matrix;
    int code = exit_success;
};

Loaded load(Session& s, const std::string& command, const std::string& file, bool compact = false) {
    try {
        return {read_matrix_file(file)};
    } catch (const ParseError& e) {
        return {std::nullopt, s.fail(command, file, "ParseError", e.what(), compact)};
    } catch (const std::exception& e) {
        return {std::nullopt, s.fail(command, file, "IOError", e.what(), compact)};
    }
}

struct LoadedForm {
    std::optional<SkewForm> form;
    int code = exit_success;
};

LoadedForm load_form(Session& s, const std::string& command, const std::string& file) {
    Loaded l = load(s, command, file);
    if (!l.matrix) return {std::nullopt, l.code};
    auto result = compute_skew_symmetrizer(*l.matrix);
    if (auto* e = std::get_if<NotSkewSymmetrizable>(&result)) return {std::nullopt, s.fail(command, file, *e)};
    return {std::get<SkewForm>(std::move(result))};
}

int verdict_code(const Decision& d) {
    switch (d.verdict) {
        case Decision::Verdict::FiniteType: return exit_success;
        case Decision::Verdict::NotFinite: return exit_not_finite;
        case Decision::Verdict::NotSkewSymmetrizable: return exit_input_error;
    }
    return exit_input_error;
}

int cmd_decide(Session& s, const std::vector<std::string>& files) {
    const bool batch = files.size() > 1;
    int worst = exit_success;
    for (const auto& file : files) {
        Loaded l = load(s, "decide", file, batch);
        if (!l.matrix) {
            worst = std::max(worst, l.code);
            continue;
        }
        const Decision d = decide(*l.matrix);
        const int code = verdict_code(d);
        worst = std::max(worst, code);
        if (s.json()) {
            Json j = report::header("decide", file);
            j.update(report::decision(d));
            s.emit(j, batch);
        } else {
            s.out() << (batch ? file + ": " : "") << report::decision_text(d);
        }
    }
    return worst;
}

int cmd_cycles(Session& s, const std::string& file) {
    LoadedForm l = load_form(s, "cycles", file);
    if (!l.form) return l.code;
    const Quiver g = build_quiver(*l.form);
    const auto components = two_connected_components(g);
    const auto cod = chordless_cycles_cod(g);
    const auto* inv = std::get_if<CycleInventory>(&cod);

    if (s.json()) {
        Json j = report::header("cycles", file);
        Json comps = Json::array();
        for (const auto& c : components) {
            comps.push_back({{"vertices", report::vertices(c.vertices)},
                             {"edges", report::edges(c.edges)},
                             {"kind", c.kind == TwoConnectedComponent::Kind::SingleEdge ? "SingleEdge" : "Cyclic"}});
        }
        j["components"] = std::move(comps);
        j["cyclically_oriented"] = inv != nullptr;
        if (inv) {
            j.update(report::inventory(*inv));
            j["failure"] = nullptr;
        } else {
            j["failure"] = report::orientation_failure(std::get<NotCyclicallyOriented>(cod));
        }
        s.emit(j);
    } else if (inv) {
        s.out() << "CyclicallyOriented\n  two-connected components: " << components.size() << '\n';
        for (const auto& c : components)
            s.out() << "    " << report::vertex_list(c.vertices)
                    << (c.kind == TwoConnectedComponent::Kind::SingleEdge ? " SingleEdge" : " Cyclic") << '\n';
        s.out() << "  chordless cycles (bottom of stack first): " << inv->cycles.size() << '\n';
        for (const auto& c : inv->cycles)
            s.out() << "    " << report::vertex_list(c.vertices)
                    << (c.orientation == ChordlessCycle::Orientation::Forward ? " Forward" : " Backward") << '\n';
        s.out() << "  single edges:";
        for (const auto& [a, b] : inv->single_edges) s.out() << " (" << a + 1 << "," << b + 1 << ")";
        s.out() << '\n';
    } else {
        s.out() << "NotCyclicallyOriented\n  reason: " << report::describe(std::get<NotCyclicallyOriented>(cod))
                << '\n';
    }
    return inv ? exit_success : exit_not_finite;
}

int cmd_companion(Session& s, const std::string& file) {
    LoadedForm l = load_form(s, "companion", file);
    if (!l.form) return l.code;
    const Quiver g = build_quiver(*l.form);
    const auto cod = chordless_cycles_cod(g);
    if (const auto* f = std::get_if<NotCyclicallyOriented>(&cod)) {
        if (s.json()) {
            Json j = report::header("companion", file);
            j["cyclically_oriented"] = false;
            j["failure"] = report::orientation_failure(*f);
            j["positive"] = nullptr;
            j["companion"] = nullptr;
            s.emit(j);
        } else {
            s.out() << "NotCyclicallyOriented\n  reason: " << report::describe(*f) << '\n';
        }
        return exit_not_finite;
    }

    const CompanionVerdict v = positive_companion_exists(*l.form, g, std::get<CycleInventory>(cod));
    if (s.json()) {
        Json j = report::header("companion", file);
        j["cyclically_oriented"] = true;
        j["failure"] = nullptr;
        j["positive"] = v.positive;
        j["companion"] = report::matrix(v.companion.matrix());
        if (v.positive) {
            Json minors = Json::array();
            for (const Integer& x : v.leading_minors) minors.push_back(report::integer(x));
            j["leading_minors"] = std::move(minors);
            j["first_bad_minor"] = nullptr;
        } else {
            j["leading_minors"] = nullptr;
            j["first_bad_minor"] = *v.first_bad_minor;
        }
        s.emit(j);
    } else {
        if (v.positive)
            s.out() << "Positive\n";
        else
            s.out() << "NotPositive\n  leading minor of order " << *v.first_bad_minor << " is not positive\n";
        s.out() << "  companion:\n" << report::matrix_rows(v.companion.matrix(), "    ");
        if (v.positive) {
            s.out() << "  leading minors:";
            for (const Integer& x : v.leading_minors) s.out() << ' ' << x;
            s.out() << '\n';
        }
    }
    return v.positive ? exit_success : exit_not_finite;
}

int cmd_mutate(Session& s, const std::string& file, long k) {
    LoadedForm l = load_form(s, "mutate", file);
    if (!l.form) return l.code;
    if (k < 1 || static_cast<std::size_t>(k) > l.form->size())
        return s.fail("mutate", file, "UsageError",
                      "direction " + std::to_string(k) + " is outside 1.." + std::to_string(l.form->size()));
    const SkewForm mutated = mutate(*l.form, static_cast<std::size_t>(k - 1));
    if (s.json()) {
        Json j = report::header("mutate", file);
        j["k"] = k;
        j["matrix"] = report::matrix(mutated.matrix());
        j["symmetrizer"] = report::symmetrizer(mutated.symmetrizer());
        s.emit(j);
    } else {
        s.out() << format_matrix(mutated.matrix());
    }
    return exit_success;
}

int oracle_code(MutationClassReport::Status status) {
    switch (status) {
        case MutationClassReport::Status::FiniteClass: return exit_success;
        case MutationClassReport::Status::LargeEntryFound: return exit_not_finite;
        case MutationClassReport::Status::LimitExceeded: return exit_inconclusive;
    }
    return exit_inconclusive;
}

int cmd_oracle(Session& s, const std::string& file, std::size_t limit) {
    LoadedForm l = load_form(s, "oracle", file);
    if (!l.form) return l.code;
    const MutationClassReport r = explore_mutation_class(*l.form, limit);
    if (s.json()) {
        Json j = report::header("oracle", file);
        j.update(report::mutation_class(r));
        s.emit(j);
    } else {
        s.out() << report::mutation_class_text(r);
    }
    return oracle_code(r.status);
}

int cmd_compare(Session& s, const std::string& file, std::size_t limit, std::size_t cap) {
    LoadedForm l = load_form(s, "compare", file);
    if (!l.form) return l.code;

    const Decision d = decide(*l.form);
    const MutationClassReport r = explore_mutation_class(*l.form, limit);
    std::string brute = "Skipped";
    std::optional<bool> brute_found;
    try {
        brute_found = brute_force_positive_companion(*l.form, cap).has_value();
        brute = *brute_found ? "Found" : "None";
    } catch (const CapExceeded&) {
    }

    // Finite type <=> mutation class bounded <=> cyclically oriented with a positive companion.
    bool agree = true;
    bool conclusive = r.status != MutationClassReport::Status::LimitExceeded;
    if (conclusive) agree = d.finite() == (r.status == MutationClassReport::Status::FiniteClass);
    if (brute_found) agree = agree && d.finite() == (d.inventory.has_value() && *brute_found);
    const std::string agreement = !agree ? "DISAGREE" : conclusive ? "AGREE" : "INCONCLUSIVE";

    if (s.json()) {
        Json j = report::header("compare", file);
        j["decide"] = std::string(to_string(d.verdict));
        j["oracle"] = report::to_string(r.status);
        j["brute_force"] = brute;
        j["agreement"] = agreement;
        s.emit(j);
    } else {
        s.out() << "decide: " << to_string(d.verdict) << "; oracle(c): " << report::to_string(r.status)
                << "; brute-force: " << brute << "; " << agreement << '\n';
    }
    if (!agree) return exit_disagreement;
    if (!conclusive) return exit_inconclusive;
    return verdict_code(d);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide whether a skew-symmetrizable matrix defines a cluster algebra of finite type.", "finitype"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit machine-readable JSON reports");

    std::vector<std::string> files;
    std::string file;
    long k = 0;
    std::size_t limit = 0;
    std::size_t cap = default_brute_force_cap;

    auto* decide_cmd = app.add_subcommand("decide", "Run the finite-type test on one or more matrix files");
    decide_cmd->add_option("files", files, "Matrix files")->required();
    decide_cmd->add_flag("--json", json, "Emit machine-readable JSON reports");

    auto* cycles_cmd = app.add_subcommand("cycles", "List chordless cycles or report why the quiver is not cyclically oriented");
    cycles_cmd->add_option("file", file, "Matrix file")->required();
    cycles_cmd->add_flag("--json", json, "Emit machine-readable JSON reports");

    auto* companion_cmd = app.add_subcommand("companion", "Build the sign-condition companion and test positivity");
    companion_cmd->add_option("file", file, "Matrix file")->required();
    companion_cmd->add_flag("--json", json, "Emit machine-readable JSON reports");

    auto* mutate_cmd = app.add_subcommand("mutate", "Mutate in direction K (1-based) and print the result");
    mutate_cmd->add_option("file", file, "Matrix file")->required();
    mutate_cmd->add_option("-k", k, "Mutation direction")->required();
    mutate_cmd->add_flag("--json", json, "Emit machine-readable JSON reports");

    auto* oracle_cmd = app.add_subcommand("oracle", "Explore the mutation class looking for |b_ij * b_ji| >= 4");
    oracle_cmd->add_option("file", file, "Matrix file")->required();
    oracle_cmd->add_option("--limit", limit, "Maximum number of matrices to visit")->check(CLI::PositiveNumber);
    oracle_cmd->add_flag("--json", json, "Emit machine-readable JSON reports");

    auto* compare_cmd = app.add_subcommand("compare", "Run decide and both brute-force oracles and compare");
    compare_cmd->add_option("file", file, "Matrix file")->required();
    compare_cmd->add_option("--limit", limit, "Mutation-class visit limit")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--cap", cap, "Largest arc count for the exhaustive companion search");
    compare_cmd->add_flag("--json", json, "Emit machine-readable JSON reports");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_input_error;
    }

    Session s(out, err, json);
    try {
        if (decide_cmd->parsed()) return cmd_decide(s, files);
        if (cycles_cmd->parsed()) return cmd_cycles(s, file);
        if (companion_cmd->parsed()) return cmd_companion(s, file);
        if (mutate_cmd->parsed()) return cmd_mutate(s, file, k);
        if (oracle_cmd->parsed()) return cmd_oracle(s, file, resolve_oracle_limit(limit));
        if (compare_cmd->parsed()) return cmd_compare(s, file, resolve_oracle_limit(limit), cap);
    } catch (const std::invalid_argument& e) {
        return s.fail(app.get_subcommands().front()->get_name(), file, "UsageError", e.what());
    }
    err << app.help();
    return exit_input_error;
}

}  // namespace finitype
