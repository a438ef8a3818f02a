#include "su3coh/classify.hpp"

#include <numeric>
#include <set>

namespace su3coh {

TubeDescriptor TubeDescriptor::l() {
    TubeDescriptor t;
    t.kind = Kind::L;
    return t;
}

TubeDescriptor TubeDescriptor::proj(long long m) {
    const auto slice = SliceRep::u2(m);
    TubeDescriptor t;
    t.kind = Kind::P;
    t.m = slice.m;
    return t;
}

TubeDescriptor TubeDescriptor::flag(long long p, long long q) {
    const auto slice = SliceRep::torus(p, q);
    TubeDescriptor t;
    t.kind = Kind::F;
    t.p = slice.p;
    t.q = slice.q;
    return t;
}

TubeDescriptor TubeDescriptor::s_quot(long long h) {
    if (h < 2) throw InvalidArgument("S/Z_h requires h > 1");
    TubeDescriptor t;
    t.kind = Kind::SQuot;
    t.h = h;
    return t;
}

TubeDescriptor TubeDescriptor::l_quot3() {
    TubeDescriptor t;
    t.kind = Kind::LQuot3;
    return t;
}

SliceRep TubeDescriptor::slice() const {
    switch (kind) {
        case Kind::S:
        case Kind::SQuot: return SliceRep::su2_standard();
        case Kind::L:
        case Kind::LQuot3: return SliceRep::so3_standard();
        case Kind::P: return SliceRep::u2(m);
        case Kind::F: return SliceRep::torus(p, q);
    }
    throw InvalidArgument("invalid tube descriptor");
}

PrincipalStabilizer principal_stabilizer(const TubeDescriptor& t) {
    PrincipalStabilizer ps = principal_stabilizer(t.slice());
    // The quotient tubes contribute their cyclic component group to the
    // principal stabilizer.
    if (t.kind == TubeDescriptor::Kind::SQuot) ps.finite_part = t.h;
    if (t.kind == TubeDescriptor::Kind::LQuot3) ps.finite_part = 3;
    return ps;
}

bool tube_absorbs_tau(const TubeDescriptor& t) {
    if (principal_stabilizer(t).circle.cls != CircleClass::RootType)
        throw NotRootType("tau absorption only concerns RootType principal stabilizers");
    switch (t.kind) {
        case TubeDescriptor::Kind::S:
        case TubeDescriptor::Kind::L:
        case TubeDescriptor::Kind::SQuot:
        case TubeDescriptor::Kind::LQuot3:
        case TubeDescriptor::Kind::F:
            return true;
        case TubeDescriptor::Kind::P:
            // the twisted normalizer component misses the U(2) stabilizer;
            // only the m = 1 tube has a RootType stabilizer at all
            return false;
    }
    throw InvalidArgument("invalid tube descriptor");
}

const char* to_string(GluingCount::Reason r) {
    switch (r) {
        case GluingCount::Reason::NoMatch: return "NoMatch";
        case GluingCount::Reason::UniqueByConnectedNormalizer:
            return "UniqueByConnectedNormalizer";
        case GluingCount::Reason::TauAbsorbed: return "TauAbsorbed";
        case GluingCount::Reason::TwoClasses: return "TwoClasses";
    }
    return "?";
}

namespace {

bool is_quotient(const TubeDescriptor& t) {
    return t.kind == TubeDescriptor::Kind::SQuot ||
           t.kind == TubeDescriptor::Kind::LQuot3;
}

} // namespace

GluingCount count_diffeo_classes(const TubeDescriptor& t1, const TubeDescriptor& t2) {
    const auto s1 = principal_stabilizer(t1);
    const auto s2 = principal_stabilizer(t2);
    if ((is_quotient(t1) || is_quotient(t2)) && s1.finite_part != s2.finite_part)
        throw IncompatibleRegime("quotient tube paired across component groups: h " +
                                 std::to_string(s1.finite_part) + " vs " +
                                 std::to_string(s2.finite_part));
    if (!(s1 == s2)) return {0, GluingCount::Reason::NoMatch};
    if (s1.circle.cls != CircleClass::RootType)
        return {1, GluingCount::Reason::UniqueByConnectedNormalizer};
    if (tube_absorbs_tau(t1) || tube_absorbs_tau(t2))
        return {1, GluingCount::Reason::TauAbsorbed};
    return {2, GluingCount::Reason::TwoClasses};
}

std::vector<TubeDescriptor> table_p_tubes(long long bound) {
    std::vector<TubeDescriptor> out;
    for (long long m = 1; m <= bound; m += 2) out.push_back(TubeDescriptor::proj(m));
    return out;
}

std::vector<TubeDescriptor> table_f_tubes(long long bound, bool coprime) {
    std::vector<TubeDescriptor> out;
    for (long long q = 1; q <= bound; ++q)
        for (long long p = 0; p <= q; ++p) {
            if (weight_canonical(p, q) != std::pair{p, q}) continue;
            const long long g = std::gcd(p, q);
            if (coprime != (g == 1)) continue;
            out.push_back(TubeDescriptor::flag(p, q));
        }
    return out;
}

std::vector<std::pair<TubeDescriptor, GluingCount>>
admissible_partners(const TubeDescriptor& t, long long bound) {
    if (bound < 1) throw InvalidArgument("enumeration bound must be >= 1");
    std::vector<TubeDescriptor> candidates{TubeDescriptor::s(), TubeDescriptor::l()};
    for (const auto& c : table_p_tubes(bound)) candidates.push_back(c);
    for (bool coprime : {true, false})
        for (const auto& c : table_f_tubes(bound, coprime)) candidates.push_back(c);
    for (long long h = 2; h <= bound; ++h) candidates.push_back(TubeDescriptor::s_quot(h));
    if (bound >= 3) candidates.push_back(TubeDescriptor::l_quot3());

    std::vector<std::pair<TubeDescriptor, GluingCount>> out;
    for (const auto& c : candidates) {
        GluingCount gc;
        try {
            gc = count_diffeo_classes(t, c);
        } catch (const IncompatibleRegime&) {
            continue;
        }
        if (gc.count > 0) out.push_back({c, gc});
    }
    return out;
}

CircleBaseResult classify_circle_base(long long k, long long l) {
    const auto c = canonicalize(k, l);
    return {true, c.cls == CircleClass::RootType};
}

std::string tube_label(const TubeDescriptor& t) {
    switch (t.kind) {
        case TubeDescriptor::Kind::S: return "S";
        case TubeDescriptor::Kind::L: return "L";
        case TubeDescriptor::Kind::P: return "P(" + std::to_string(t.m) + ")";
        case TubeDescriptor::Kind::F:
            return "F(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
        case TubeDescriptor::Kind::SQuot: return "S/Z" + std::to_string(t.h);
        case TubeDescriptor::Kind::LQuot3: return "L/Z3";
    }
    return "?";
}

const std::vector<NamedExample>& named_example_registry() {
    static const std::vector<NamedExample> reg = {
        {"P(1)", "P(1)", "complex Grassmannian Gr_2(C^4)"},
        {"P(1)", "S", "quaternionic projective plane HP^2"},
        {"P(1)", "L", "exceptional Wolf space G_2/SO(4)"},
        {"F(1,1)", "P(3)", "product CP^2 x CP^2"},
        {"L", "S", "the group manifold SU(3)"},
    };
    return reg;
}

namespace {

std::vector<std::string> labels_of(const std::vector<TubeDescriptor>& ts) {
    std::vector<std::string> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(tube_label(t));
    return out;
}

void attach_named_examples(CountTable& table) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& ex : named_example_registry())
        for (size_t i = 0; i < table.row_labels.size(); ++i)
            for (size_t j = 0; j < table.col_labels.size(); ++j) {
                const auto& r = table.row_labels[i];
                const auto& c = table.col_labels[j];
                if ((r == ex.row && c == ex.col) || (r == ex.col && c == ex.row))
                    if (table.cells[i][j] > 0 &&
                        seen.insert(std::minmax(r, c)).second)
                        table.named_examples.push_back({r, c, ex.name});
            }
}

using CellRule = std::function<int(const TubeDescriptor&, const TubeDescriptor&)>;

CountTable build_table(std::string id, std::string caption,
                       const std::vector<TubeDescriptor>& rows,
                       const std::vector<TubeDescriptor>& cols,
                       const CellRule& rule) {
    CountTable t;
    t.id = std::move(id);
    t.caption = std::move(caption);
    t.row_labels = labels_of(rows);
    t.col_labels = labels_of(cols);
    for (const auto& r : rows) {
        std::vector<int> row;
        for (const auto& c : cols) row.push_back(rule(r, c));
        t.cells.push_back(std::move(row));
    }
    attach_named_examples(t);
    return t;
}

std::string slice_family_label(StabilizerTag tag) {
    switch (tag) {
        case StabilizerTag::SU2:
        case StabilizerTag::SO3: return "[Sigma^2]";
        case StabilizerTag::U2: return "[Sigma^1 (x) (A^m + A^-m)], m odd";
        case StabilizerTag::T2: return "A^p (x) A^q, (p,q) != (0,0)";
    }
    return "?";
}

std::string slice_label(const SliceRep& s) {
    switch (s.kind) {
        case SliceRep::Kind::SU2Standard:
        case SliceRep::Kind::SO3Standard: return "[Sigma^2]";
        case SliceRep::Kind::U2: return "U2(" + std::to_string(s.m) + ")";
        case SliceRep::Kind::Torus:
            return "T2(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
    }
    return "?";
}

InfoTable build_slice_table(long long bound) {
    InfoTable t;
    t.id = "table-1-slice-representations";
    t.caption = "Connected singular stabilizers and their sphere-transitive slice representations";
    t.col_labels = {"SU(2)", "U(2)", "SO(3)", "T^2"};
    t.row_labels = {"dim V", "V", "reps within bound"};
    const std::array<StabilizerTag, 4> tags = {StabilizerTag::SU2, StabilizerTag::U2,
                                               StabilizerTag::SO3, StabilizerTag::T2};
    std::vector<std::string> dims, families, enumerated;
    for (auto tag : tags) {
        const auto reps = enumerate_slice_reps(tag, bound);
        dims.push_back(std::to_string(reps.front().real_dim()));
        families.push_back(slice_family_label(tag));
        std::string joined;
        for (const auto& r : reps) {
            if (!joined.empty()) joined += ", ";
            joined += slice_label(r);
        }
        enumerated.push_back(joined);
    }
    t.cells = {dims, families, enumerated};
    return t;
}

// Common row/column layouts of the three count tables.
struct TableLayout {
    std::vector<TubeDescriptor> conn;      // S, L, P(m)
    std::vector<TubeDescriptor> f1;        // F(p,q), gcd = 1
    std::vector<TubeDescriptor> fh;        // F(p,q), gcd > 1
    std::vector<TubeDescriptor> quots;     // S/Z_h, L/Z3
    std::vector<TubeDescriptor> cols3;     // F(l,m), P(l), L, S
    std::vector<TubeDescriptor> cols4;     // S/Z_h, L/Z3, F(l,m)
};

TableLayout make_layout(long long bound) {
    TableLayout lay;
    lay.conn = {TubeDescriptor::s(), TubeDescriptor::l()};
    for (const auto& t : table_p_tubes(bound)) lay.conn.push_back(t);
    lay.f1 = table_f_tubes(bound, true);
    lay.fh = table_f_tubes(bound, false);
    for (long long h = 2; h <= bound; ++h) lay.quots.push_back(TubeDescriptor::s_quot(h));
    if (bound >= 3) lay.quots.push_back(TubeDescriptor::l_quot3());
    lay.cols3 = lay.f1;
    for (const auto& t : lay.conn) lay.cols3.push_back(t);
    lay.cols4 = lay.quots;
    for (const auto& t : lay.fh) lay.cols4.push_back(t);
    return lay;
}

TableSet emit_with_rule(long long bound, const CellRule& rule) {
    if (bound < 1) throw InvalidArgument("table bound must be >= 1");
    const TableLayout lay = make_layout(bound);
    TableSet set;
    set.slice_table = build_slice_table(bound);
    set.connected = build_table(
        "table-2-connected-stabilizers",
        "Diffeomorphism classes, both singular stabilizers in {SU(2), U(2), SO(3)}",
        lay.conn, lay.conn, rule);
    set.torus = build_table(
        "table-3-torus-stabilizer",
        "Diffeomorphism classes, one singular stabilizer T^2 with gcd(p,q) = 1",
        lay.f1, lay.cols3, rule);
    set.quotient = build_table(
        "table-4-nonconnected-stabilizers",
        "Diffeomorphism classes with non-connected principal stabilizers, gcd(p,q) > 1",
        lay.fh, lay.cols4, rule);
    return set;
}

int rule_engine_cell(const TubeDescriptor& a, const TubeDescriptor& b) {
    try {
        return count_diffeo_classes(a, b).count;
    } catch (const IncompatibleRegime&) {
        return 0;  // unmatchable component groups glue to nothing
    }
}

// Literal delta evaluation on canonical labels.
int delta_cell(const TubeDescriptor& a, const TubeDescriptor& b) {
    using K = TubeDescriptor::Kind;
    const auto wc = [](const TubeDescriptor& f) { return weight_canonical(f.p, f.q); };
    const auto sl = [](const TubeDescriptor& t) { return t.kind == K::S || t.kind == K::L; };
    if (a.kind == K::F || b.kind == K::F) {
        const auto& f = a.kind == K::F ? a : b;
        const auto& o = a.kind == K::F ? b : a;
        switch (o.kind) {
            case K::F: return wc(f) == wc(o) ? 1 : 0;
            case K::P: return wc(f) == weight_canonical((o.m - 1) / 2, 1) ? 1 : 0;
            case K::S:
            case K::L: return wc(f) == weight_canonical(0, 1) ? 1 : 0;
            case K::SQuot: return wc(f) == weight_canonical(0, o.h) ? 1 : 0;
            case K::LQuot3: return wc(f) == weight_canonical(0, 3) ? 1 : 0;
        }
    }
    if (sl(a) && sl(b)) return 1;
    if (a.kind == K::P && b.kind == K::P)
        return (a.m == b.m ? 1 : 0) + (a.m == 1 && b.m == 1 ? 1 : 0);
    if (a.kind == K::P || b.kind == K::P) {
        const auto& p = a.kind == K::P ? a : b;
        const auto& o = a.kind == K::P ? b : a;
        if (sl(o)) return p.m == 1 ? 1 : 0;
    }
    return 0;  // no delta formula couples the remaining combinations
}

} // namespace

TableSet emit_tables(long long bound) { return emit_with_rule(bound, rule_engine_cell); }

TableSet emit_tables_delta(long long bound) { return emit_with_rule(bound, delta_cell); }

} // namespace su3coh
