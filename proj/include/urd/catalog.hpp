#ifndef URD_CATALOG_HPP
#define URD_CATALOG_HPP

#include "urd/design.hpp"

#include <string>
#include <vector>

namespace urd {

struct CatalogEntry {
    std::string key;
    Design design;
    DesignSpec spec;
    std::string provenance;
};

// Keys: d1_urgdd_2x4, d3_urd12, d4_urgdd_8x3, d6_urgdd_4x4, d9_iurd28,
// d11_iurd20. Every entry is verified when the catalog is first touched.
std::vector<std::string> catalog_keys();
const CatalogEntry& lookup(const std::string& key);

// Symbolic points such as a_3 (letter 'a', subscript 3). A point with
// letter 0 is the plain integer `subscript`.
struct SymbolicPoint {
    char letter = 0;
    int subscript = 0;
};

struct SymbolicBlock {
    BlockKind kind = BlockKind::Star;
    std::vector<SymbolicPoint> pts; // star: center first
};

// Maps letter L and subscript m to index(L)*modulus + (m - first) mod modulus.
struct PointNaming {
    std::string letters;
    int modulus = 1;
    int first_subscript = 0;

    Point operator()(SymbolicPoint p) const;
};

// "(a1;b2,c3,x2) {a0,b7} (0;4,5,6)": stars in parentheses, edges in braces.
std::vector<SymbolicBlock> parse_symbolic_blocks(const std::string& text);

// Each base block generates one class: its `modulus` translates (all
// subscripts shifted by i, i = 0..modulus-1). Throws DevelopmentError when
// translates collide inside a class.
std::vector<ResolutionClass> develop_mod(const std::vector<SymbolicBlock>& base, int modulus,
                                         const PointNaming& naming);

// One class: the union of the translates of all base blocks.
ResolutionClass develop_orbit_union(const std::vector<SymbolicBlock>& base, int modulus,
                                    const PointNaming& naming);

// `modulus` classes: the i-th is the base class with subscripts shifted by i.
std::vector<ResolutionClass> develop_shifts(const std::vector<SymbolicBlock>& base_class,
                                            int modulus, const PointNaming& naming);

} // namespace urd

#endif // URD_CATALOG_HPP
