#include "finitype/report.hpp"

#include <sstream>

namespace finitype::report {

Json integer(const Integer& x) {
    if (mpz_sizeinbase(x.get_mpz_t(), 2) < 63) return Json(static_cast<long long>(x.get_si()));
    return Json(x.get_str());
}

Json matrix(const SquareIntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (const Integer& x : m.row(i)) row.push_back(integer(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vertices(const std::vector<std::size_t>& vs) {
    Json out = Json::array();
    for (std::size_t v : vs) out.push_back(v + 1);
    return out;
}

Json edges(const std::vector<Edge>& es) {
    Json out = Json::array();
    for (const auto& [a, b] : es) out.push_back(Json::array({a + 1, b + 1}));
    return out;
}

Json symmetrizer(const DiagonalRational& d) {
    Json out = Json::array();
    for (const Integer& x : d.entries()) out.push_back(integer(x));
    return out;
}

Json inventory(const CycleInventory& inv) {
    Json cycles = Json::array();
    for (const auto& c : inv.cycles) {
        cycles.push_back({
            {"vertices", vertices(c.vertices)},
            {"orientation", c.orientation == ChordlessCycle::Orientation::Forward ? "Forward" : "Backward"},
        });
    }
    return {{"cycles", std::move(cycles)}, {"single_edges", edges(inv.single_edges)}};
}

Json orientation_failure(const NotCyclicallyOriented& f) {
    switch (f.kind) {
        case NotCyclicallyOriented::Kind::EdgeBoundExceeded:
            return {{"kind", "EdgeBoundExceeded"},
                    {"component", vertices(f.vertices)},
                    {"edges", f.edges},
                    {"bound", f.bound},
                    {"whole_graph", f.whole_graph}};
        case NotCyclicallyOriented::Kind::NonCyclicCycle:
            return {{"kind", "NonCyclicCycle"}, {"cycle", vertices(f.vertices)}};
        case NotCyclicallyOriented::Kind::StructuralFailure:
            return {{"kind", "StructuralFailure"}, {"component", vertices(f.vertices)}, {"detail", f.detail}};
    }
    return nullptr;
}

Json domain_error(const NotSkewSymmetrizable& e) {
    const char* cause = "SignRule";
    if (e.cause == NotSkewSymmetrizable::Cause::NonPositiveRatio) cause = "NonPositiveRatio";
    if (e.cause == NotSkewSymmetrizable::Cause::InconsistentCycle) cause = "InconsistentCycle";
    return {{"kind", "NotSkewSymmetrizable"},
            {"cause", cause},
            {"pair", Json::array({e.i + 1, e.j + 1})},
            {"message", "matrix is not skew-symmetrizable: " + e.describe()}};
}

Json header(const std::string& command, const std::string& file) {
    return {{"schema_version", schema_version}, {"command", command}, {"file", file}};
}

Json decision(const Decision& d) {
    Json out = {{"verdict", std::string(to_string(d.verdict))}, {"reason", nullptr}, {"certificate", nullptr}};
    switch (d.reason) {
        case Decision::Reason::None: break;
        case Decision::Reason::NotSkewSymmetrizable: out["reason"] = domain_error(*d.domain_error); break;
        case Decision::Reason::EdgeBoundExceeded:
        case Decision::Reason::NonCyclicCycle:
        case Decision::Reason::StructuralFailure: out["reason"] = orientation_failure(*d.orientation_failure); break;
        case Decision::Reason::CompanionNotPositive:
            out["reason"] = {{"kind", "CompanionNotPositive"},
                             {"minor", *d.bad_minor},
                             {"companion", matrix(d.companion->matrix())}};
            break;
    }
    if (d.finite()) {
        Json minors = Json::array();
        for (const Integer& x : d.leading_minors) minors.push_back(integer(x));
        Json cert = {{"symmetrizer", symmetrizer(d.form->symmetrizer())}};
        cert.update(inventory(*d.inventory));
        cert["companion"] = matrix(d.companion->matrix());
        cert["leading_minors"] = std::move(minors);
        out["certificate"] = std::move(cert);
    }
    return out;
}

std::string to_string(MutationClassReport::Status s) {
    switch (s) {
        case MutationClassReport::Status::FiniteClass: return "FiniteClass";
        case MutationClassReport::Status::LargeEntryFound: return "LargeEntryFound";
        case MutationClassReport::Status::LimitExceeded: return "LimitExceeded";
    }
    return "?";
}

Json mutation_class(const MutationClassReport& r) {
    Json out = {{"status", to_string(r.status)}, {"visited", r.visited}, {"limit", r.limit}, {"witness", nullptr}};
    if (r.witness) {
        const LargeEntry& w = *r.witness;
        out["witness"] = {{"pair", Json::array({w.i + 1, w.j + 1})},
                          {"value", integer(w.value)},
                          {"depth", w.depth},
                          {"matrix", matrix(w.matrix)}};
    }
    return out;
}

std::string vertex_list(const std::vector<std::size_t>& vs) {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i] + 1;
    os << '>';
    return os.str();
}

std::string matrix_rows(const SquareIntMatrix& m, const std::string& indent) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << indent;
        for (std::size_t j = 0; j < m.size(); ++j) os << (j ? " " : "") << m(i, j);
        os << '\n';
    }
    return os.str();
}

std::string describe(const NotCyclicallyOriented& f) {
    std::ostringstream os;
    switch (f.kind) {
        case NotCyclicallyOriented::Kind::EdgeBoundExceeded:
            os << "EdgeBoundExceeded: " << f.edges << " edges > bound " << f.bound << " on "
               << (f.whole_graph ? "the whole graph" : "component " + vertex_list(f.vertices));
            break;
        case NotCyclicallyOriented::Kind::NonCyclicCycle:
            os << "NonCyclicCycle: " << vertex_list(f.vertices) << " is chordless but not cyclically oriented";
            break;
        case NotCyclicallyOriented::Kind::StructuralFailure:
            os << "StructuralFailure: " << f.detail << " on " << vertex_list(f.vertices);
            break;
    }
    return os.str();
}

std::string decision_text(const Decision& d) {
    std::ostringstream os;
    os << to_string(d.verdict) << '\n';
    switch (d.reason) {
        case Decision::Reason::None: break;
        case Decision::Reason::NotSkewSymmetrizable: os << "  reason: " << d.domain_error->describe() << '\n'; break;
        case Decision::Reason::EdgeBoundExceeded:
        case Decision::Reason::NonCyclicCycle:
        case Decision::Reason::StructuralFailure: os << "  reason: " << describe(*d.orientation_failure) << '\n'; break;
        case Decision::Reason::CompanionNotPositive:
            os << "  reason: CompanionNotPositive: leading minor of order " << *d.bad_minor << " is not positive\n"
               << "  companion:\n"
               << matrix_rows(d.companion->matrix(), "    ");
            break;
    }
    if (d.finite()) {
        os << "  chordless cycles: " << d.inventory->cycles.size() << '\n';
        for (const auto& c : d.inventory->cycles) os << "    " << vertex_list(c.vertices) << '\n';
        os << "  single edges: " << d.inventory->single_edges.size() << '\n';
    }
    return os.str();
}

std::string mutation_class_text(const MutationClassReport& r) {
    std::ostringstream os;
    os << to_string(r.status) << '\n' << "  visited: " << r.visited << " (limit " << r.limit << ")\n";
    if (r.witness) {
        const LargeEntry& w = *r.witness;
        os << "  witness: |b(" << w.i + 1 << "," << w.j + 1 << ") * b(" << w.j + 1 << "," << w.i + 1 << ")| = " << w.value
           << " at depth " << w.depth << '\n'
           << matrix_rows(w.matrix, "    ");
    }
    return os.str();
}

}  // namespace finitype::report
