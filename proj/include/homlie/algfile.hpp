#pragma once

#include <iosfwd>
#include <optional>

#include "homlie/bialgebra.hpp"

namespace homlie {

// Line-oriented algebra definition file.  See README for the grammar.
// Bracket lines must list both orders of each off-diagonal pair explicitly;
// a one-sided entry is rejected with the pair named.
struct AlgebraFile {
    int schema_version = 1;
    std::size_t dim = 0;
    std::vector<std::string> basis;

    std::vector<Scalar> bracket;       // dim^3 structure constants
    std::vector<bool> bracket_given;   // per ordered pair (i,j)
    bool has_cobracket = false;
    std::vector<Scalar> cobracket;     // dim^3
    bool has_alpha = false;
    LinearMap alpha;                   // defaults to identity
    std::optional<Tensor2> r;
    std::optional<Tensor2> t;
    Bindings params;                   // `param` lines

    std::size_t basis_index(const std::string& name) const;  // throws ValidationError
};

AlgebraFile parse_algebra_file(std::istream& in);
AlgebraFile parse_algebra_text(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);  // ParseError on missing file
std::string emit_algebra_file(const AlgebraFile& f);

// Substitutes bindings (file params overridden/extended by `extra`) into
// every scalar of the file.
void apply_params(AlgebraFile& f, const Bindings& extra);

// Unvalidated views, so check suites can report axiom failures instead of
// refusing to construct.  Structural problems (missing mirrors, shape
// errors) still throw ValidationError.
HomLieAlgebra to_algebra(const AlgebraFile& f);
HomLieCoalgebra to_coalgebra(const AlgebraFile& f);  // requires has_cobracket

AlgebraFile from_parts(const HomLieAlgebra& L, const HomLieCoalgebra* C,
                       const Tensor2* r, const Tensor2* t);

}  // namespace homlie
