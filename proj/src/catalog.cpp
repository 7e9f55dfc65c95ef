#include "urd/catalog.hpp"

#include "urd/error.hpp"
#include "urd/verifier.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>

namespace urd {

Point PointNaming::operator()(SymbolicPoint p) const
{
    if (p.letter == 0)
        return p.subscript;
    auto idx = letters.find(p.letter);
    if (idx == std::string::npos)
        throw DevelopmentError(std::string("unknown point letter '") + p.letter + "'");
    int m = ((p.subscript - first_subscript) % modulus + modulus) % modulus;
    return static_cast<Point>(idx) * modulus + m;
}

std::vector<SymbolicBlock> parse_symbolic_blocks(const std::string& text)
{
    std::vector<SymbolicBlock> out;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto read_point = [&]() {
        skip_space();
        SymbolicPoint p;
        if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
            p.letter = text[i++];
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (start == i)
            throw DevelopmentError("expected a point at offset " + std::to_string(start) + " in '" +
                                   text + "'");
        p.subscript = std::stoi(text.substr(start, i - start));
        return p;
    };
    auto expect = [&](char c) {
        skip_space();
        if (i >= text.size() || text[i] != c)
            throw DevelopmentError(std::string("expected '") + c + "' at offset " +
                                   std::to_string(i) + " in '" + text + "'");
        ++i;
    };
    for (skip_space(); i < text.size(); skip_space()) {
        SymbolicBlock b;
        if (text[i] == '(') {
            ++i;
            b.kind = BlockKind::Star;
            b.pts.push_back(read_point());
            expect(';');
            b.pts.push_back(read_point());
            expect(',');
            b.pts.push_back(read_point());
            expect(',');
            b.pts.push_back(read_point());
            expect(')');
        } else if (text[i] == '{') {
            ++i;
            b.kind = BlockKind::Edge;
            b.pts.push_back(read_point());
            expect(',');
            b.pts.push_back(read_point());
            expect('}');
        } else if (text[i] == ',') {
            ++i;
            continue;
        } else {
            throw DevelopmentError("unexpected '" + std::string(1, text[i]) + "' in '" + text + "'");
        }
        out.push_back(std::move(b));
    }
    return out;
}

namespace {

Block realize(const SymbolicBlock& b, int shift, const PointNaming& naming)
{
    auto at = [&](std::size_t k) {
        SymbolicPoint p = b.pts[k];
        if (p.letter != 0)
            p.subscript += shift;
        return naming(p);
    };
    if (b.kind == BlockKind::Edge)
        return Block::edge(at(0), at(1));
    return Block::star(at(0), at(1), at(2), at(3));
}

ClassKind kind_for(const std::vector<SymbolicBlock>& blocks)
{
    if (blocks.empty())
        throw DevelopmentError("empty base class");
    for (const auto& b : blocks)
        if (b.kind != blocks.front().kind)
            throw DevelopmentError("base class mixes edges and stars");
    return blocks.front().kind == BlockKind::Edge ? ClassKind::OneFactor : ClassKind::StarClass;
}

void check_disjoint(const ResolutionClass& cls)
{
    std::set<Point> seen;
    for (const auto& b : cls.blocks)
        for (Point p : b.points())
            if (!seen.insert(p).second)
                throw DevelopmentError("developed class repeats point " + std::to_string(p));
}

} // namespace

std::vector<ResolutionClass> develop_mod(const std::vector<SymbolicBlock>& base, int modulus,
                                         const PointNaming& naming)
{
    if (modulus < 1)
        throw DevelopmentError("modulus must be positive");
    std::vector<ResolutionClass> out;
    for (const auto& b : base)
        out.push_back(develop_orbit_union({b}, modulus, naming));
    return out;
}

ResolutionClass develop_orbit_union(const std::vector<SymbolicBlock>& base, int modulus,
                                    const PointNaming& naming)
{
    if (modulus < 1)
        throw DevelopmentError("modulus must be positive");
    ResolutionClass cls;
    cls.kind = kind_for(base);
    for (const auto& b : base)
        for (int i = 0; i < modulus; ++i)
            cls.blocks.push_back(realize(b, i, naming));
    check_disjoint(cls);
    return cls;
}

std::vector<ResolutionClass> develop_shifts(const std::vector<SymbolicBlock>& base_class,
                                            int modulus, const PointNaming& naming)
{
    if (modulus < 1)
        throw DevelopmentError("modulus must be positive");
    std::vector<ResolutionClass> out;
    const ClassKind kind = kind_for(base_class);
    for (int i = 0; i < modulus; ++i) {
        ResolutionClass cls;
        cls.kind = kind;
        for (const auto& b : base_class)
            cls.blocks.push_back(realize(b, i, naming));
        check_disjoint(cls);
        out.push_back(std::move(cls));
    }
    return out;
}

namespace {

const PointNaming kIntegers{"", 1, 0};

ResolutionClass explicit_class(const std::string& text, const PointNaming& naming = kIntegers)
{
    auto blocks = parse_symbolic_blocks(text);
    ResolutionClass cls;
    cls.kind = kind_for(blocks);
    for (const auto& b : blocks)
        cls.blocks.push_back(realize(b, 0, naming));
    return cls;
}

ResolutionClass make_partial(ResolutionClass cls)
{
    cls.kind = cls.kind == ClassKind::OneFactor ? ClassKind::PartialOneFactor
                                                : ClassKind::PartialStarClass;
    cls.missing = Missing::hole();
    return cls;
}

std::vector<std::vector<Point>> consecutive_groups(int count, int size)
{
    return canonical_groups({{size, count}});
}

// Groups {0,1},{2,3},{4,5},{6,7}.
CatalogEntry d1()
{
    Design d;
    d.kind = DesignKind::URGDD;
    d.v = 8;
    d.groups = consecutive_groups(4, 2);
    for (const char* text : {
             "(0;2,4,6) (1;3,5,7)",
             "(2;4,1,6) (3;5,0,7)",
             "(5;2,0,7) (4;1,3,6)",
             "(6;1,3,5) (7;0,4,2)",
         })
        d.classes.push_back(explicit_class(text));
    return {"d1_urgdd_2x4", d, DesignSpec::urgdd({{2, 4}}, {0, 4}),
            "URGDD(0,4) of type 2^4 on Z_8, groups {2i,2i+1}; four star classes transcribed "
            "verbatim"};
}

// Points Z_12.
CatalogEntry d3()
{
    Design d;
    d.kind = DesignKind::URD;
    d.v = 12;
    for (const char* text : {
             "(0;4,5,6) (7;8,9,10) (11;1,2,3)",
             "(1;5,6,7) (4;9,10,11) (8;0,2,3)",
             "(2;4,6,7) (5;8,10,11) (9;0,1,3)",
             "(3;4,5,7) (6;8,9,11) (10;0,1,2)",
             "{0,7} {1,4} {2,5} {3,6} {8,11} {9,10}",
             "{0,1} {3,10} {2,9} {4,8} {5,6} {7,11}",
             "{0,11} {1,8} {2,3} {4,7} {6,10} {5,9}",
             "{0,2} {1,3} {4,5} {6,7} {8,10} {9,11}",
             "{0,3} {1,2} {5,7} {4,6} {8,9} {10,11}",
         })
        d.classes.push_back(explicit_class(text));
    return {"d3_urd12", d, DesignSpec::urd(12, {5, 4}),
            "URD(12;5,4) on Z_12; the corrected leaf of (9;0,1,3) is taken as printed inside "
            "the correction braces"};
}

// Groups a_0..a_7 -> 0..7, b_0..b_7 -> 8..15, c_0..c_7 -> 16..23.
CatalogEntry d4()
{
    const PointNaming naming{"abc", 8, 0};
    Design d;
    d.kind = DesignKind::URGDD;
    d.v = 24;
    d.groups = consecutive_groups(3, 8);
    for (const char* text : {
             "(a0;b1,b2,b3) (b0;c0,c2,c6) (c4;a1,a2,a3) (b7;c1,c5,c7) (c3;a4,a5,a6) (a7;b4,b5,b6)",
             "(a1;b0,b2,b3) (b1;c1,c3,c7) (c5;a0,a2,a3) (b4;c2,c4,c6) (c0;a7,a5,a6) (a4;b7,b5,b6)",
             "(a2;b1,b0,b3) (b2;c0,c2,c4) (c6;a1,a0,a3) (b5;c3,c5,c7) (c1;a4,a7,a6) (a5;b4,b7,b6)",
             "(a3;b1,b2,b0) (b3;c1,c3,c5) (c7;a1,a2,a0) (b6;c0,c4,c6) (c2;a4,a5,a7) (a6;b4,b5,b7)",
             "(a0;b4,b5,c4) (b7;c0,c6,a1) (c2;b6,a2,a3) (b0;c3,c5,a6) (c7;a4,a7,b3) (a5;b1,b2,c1)",
             "(a1;b5,b6,c5) (b4;c1,a2,c7) (c3;a3,a0,b7) (b1;a7,c0,c6) (c4;a4,a5,b0) (a6;b2,b3,c2)",
             "(a2;b6,b7,c6) (b5;a3,c2,c4) (c0;a1,a0,b4) (b2;a4,c1,c7) (c5;b1,a5,a6) (a7;b0,b3,c3)",
             "(a3;b4,b7,c7) (b6;a0,c3,c5) (c1;a1,a2,b5) (b3;c2,c4,a5) (c6;b2,a6,a7) (a4;c0,b0,b1)",
             "{a0,b0} {a1,b1} {a2,b2} {a3,b3} {a4,c5} {a5,c6} {a6,c7} {a7,c4} {b4,c3} {b5,c0} "
             "{b6,c1} {b7,c2}",
             "{a0,c1} {a1,c2} {a2,c3} {a3,c0} {a4,b3} {a5,b0} {a6,b1} {a7,b2} {b4,c5} {b5,c6} "
             "{b6,c7} {b7,c4}",
             "{a0,c2} {a1,c3} {a2,c0} {a3,c1} {a4,b4} {a5,b5} {a6,b6} {a7,b7} {b0,c7} {b1,c4} "
             "{b2,c5} {b3,c6}",
             "{a0,b7} {a1,b4} {a2,b5} {a3,b6} {a4,c6} {a5,c7} {a6,c4} {a7,c5} {b0,c1} {b1,c2} "
             "{b2,c3} {b3,c0}",
         })
        d.classes.push_back(explicit_class(text, naming));
    return {"d4_urgdd_8x3", d, DesignSpec::urgdd({{8, 3}}, {4, 8}),
            "URGDD(4,8) of type 8^3; a_i -> i, b_i -> 8+i, c_i -> 16+i"};
}

// Groups x_1..x_4 -> 0..3, a -> 4..7, b -> 8..11, c -> 12..15 (subscript m -> m-1).
CatalogEntry d6()
{
    const PointNaming naming{"xabc", 4, 1};
    Design d;
    d.kind = DesignKind::URGDD;
    d.v = 16;
    d.groups = consecutive_groups(4, 4);
    auto base = parse_symbolic_blocks("(a1;b2,c3,x2) (b1;a3,c3,x3) (c1;b2,a2,x3) (x1;b2,a3,c2) "
                                      "(a1;b1,c1,x1) (b1;a2,c1,x1) (c1;b4,a4,x1) (x1;b4,a2,c4)");
    d.classes = develop_mod(base, 4, naming);
    return {"d6_urgdd_4x4", d, DesignSpec::urgdd({{4, 4}}, {0, 8}),
            "URGDD(0,8) of type 4^4 from eight base stars developed mod 4; x_m -> m-1, "
            "a_m -> 3+m, b_m -> 7+m, c_m -> 11+m"};
}

// Points {x,a,b,c,d,f,g} x Z_4, letter index * 4 + (m-1) mod 4; hole x.
CatalogEntry d9()
{
    const PointNaming naming{"xabcdfg", 4, 1};
    Design d;
    d.kind = DesignKind::IURD;
    d.v = 28;
    d.hole = {0, 1, 2, 3};
    // Subscripts are written as i+k with i = 1 in the base class.
    for (const char* text : {
             "(x1;a4,b4,d4) (a1;a2,c4,g3) (b1;b2,c3,f4) (d1;d2,g4,f3) (c1;c2,a3,x4) "
             "(f1;f2,b3,x2) (g1;g2,x3,d3)",
             "(x1;c3,f2,g2) (a4;c1,x4,b1) (b3;x3,d3,f3) (d2;x2,b4,a3) (c2;a2,g3,d4) "
             "(f1;c4,a1,g4) (g1;f4,b2,d1)",
             "(x1;a2,b2,d2) (f4;a3,x2,c1) (c3;x4,d4,f1) (g2;x3,d1,a1) (a4;g3,b3,g4) "
             "(b1;g1,c2,f2) (d3;b4,f3,c4)",
             "(x1;f1,c1,g1) (a2;d2,x4,b4) (b1;x3,c4,a1) (d4;x2,f3,a3) (g4;b2,b3,f4) "
             "(f2;a4,d1,c2) (c3;d3,g2,g3)",
         }) {
        for (auto& cls : develop_shifts(parse_symbolic_blocks(text), 4, naming))
            d.classes.push_back(std::move(cls));
    }
    d.classes.push_back(make_partial(
        develop_orbit_union(parse_symbolic_blocks("{a1,f4} {b1,d2} {c1,g3}"), 4, naming)));
    d.classes.push_back(make_partial(
        develop_orbit_union(parse_symbolic_blocks("{a1,d3} {b1,c1} {f1,g3}"), 4, naming)));
    d.classes.push_back(make_partial(explicit_class(
        "{a1,a3} {a2,a4} {b1,b3} {b2,b4} {c1,c3} {c2,c4} {d1,d3} {d2,d4} {f1,f3} {f2,f4} "
        "{g1,g3} {g2,g4}",
        naming)));
    return {"d9_iurd28", d, DesignSpec::iurd(28, 4, {3, 0}, {0, 16}),
            "IURD(28,4;[3,0],[0,16]) on {x,a,b,c,d,f,g} x Z_4 with hole x; four base star "
            "classes shifted by i in Z_4, two developed 1-factors and one explicit 1-factor; "
            "letter L, subscript m -> 4*index(L) + (m-1) mod 4 over the order x,a,b,c,d,f,g"};
}

// Points Z_20, hole {0..7}.
CatalogEntry d11()
{
    Design d;
    d.kind = DesignKind::IURD;
    d.v = 20;
    d.hole = {0, 1, 2, 3, 4, 5, 6, 7};
    for (const char* text : {
             "(0;8,9,10) (1;11,12,13) (2;14,15,16) (17;3,4,5) (18;6,7,19)",
             "(0;11,12,13) (1;8,9,10) (2;17,18,19) (14;3,4,5) (15;6,7,16)",
             "(3;8,9,10) (4;11,12,15) (5;16,18,19) (13;2,6,7) (14;0,1,17)",
             "(3;11,12,13) (4;8,9,16) (6;14,17,19) (10;2,5,7) (15;0,1,18)",
             "(5;8,9,11) (7;14,16,17) (10;4,6,19) (12;2,13,15) (18;0,1,3)",
             "(6;8,9,16) (11;2,7,10) (15;3,5,13) (17;0,1,18) (19;4,12,14)",
             "(7;8,12,19) (9;2,10,14) (11;6,15,18) (13;4,5,17) (16;0,1,3)",
             "(8;2,10,15) (9;7,11,13) (12;5,6,17) (18;4,14,16) (19;0,1,3)",
         })
        d.classes.push_back(explicit_class(text));
    for (const char* text : {
             "(8;9,12,18) (11;13,14,19) (17;10,15,16)",
             "(8;11,13,17) (10;12,15,18) (16;9,14,19)",
             "(9;17,18,19) (14;10,12,15) (16;8,11,13)",
             "(12;9,11,16) (13;10,14,18) (19;8,15,17)",
             "{8,14} {9,15} {10,16} {11,17} {12,18} {13,19}",
         })
        d.classes.push_back(make_partial(explicit_class(text)));
    return {"d11_iurd20", d, DesignSpec::iurd(20, 8, {1, 4}, {0, 8}),
            "IURD(20,8;[1,4],[0,8]) on Z_20 with hole {0,...,7}"};
}

std::vector<CatalogEntry> build_catalog()
{
    std::vector<CatalogEntry> entries{d1(), d3(), d4(), d6(), d9(), d11()};
    for (auto& e : entries) {
        e.design = normalize(std::move(e.design));
        auto rep = verify(e.design, e.spec);
        if (!rep.pass)
            throw Error("catalog entry " + e.key + " fails verification: " + rep.summary());
    }
    return entries;
}

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

} // namespace

std::vector<std::string> catalog_keys()
{
    std::vector<std::string> keys;
    for (const auto& e : catalog())
        keys.push_back(e.key);
    return keys;
}

const CatalogEntry& lookup(const std::string& key)
{
    for (const auto& e : catalog())
        if (e.key == key)
            return e;
    throw NotFound("no catalog entry '" + key + "'");
}

} // namespace urd
