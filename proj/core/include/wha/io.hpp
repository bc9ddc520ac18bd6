#ifndef WHA_IO_HPP
#define WHA_IO_HPP

#include "wha/groupoid.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

// JSON file formats. Every file carries "format_version": 1 and a "kind":
//
//   algebra    dim, basis_names, structure [[i, j, k, "c"], ...], unit (opt.)
//   weak-hopf  the algebra fields plus name, coproduct {"i": [[p, q, "c"], ...]},
//              counit ["c", ...], antipode (dense rows, column j = S(e_j)),
//              idempotent [[p, q, "c"], ...] (opt.), antipodal_b (opt., dense)
//   groupoid   objects, arrows [{label, src, tgt}], compose (f∘g or null),
//              inverse; read as its convolution weak Hopf algebra
//   twist      spec (path relative to the file, or an inline object), u, v
//
// Scalars are strings in the p/q+r/s*i form; indices are 0-based.
namespace wha::io {

/// Malformed or inconsistent input. The CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kFormatVersion = 1;

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

Algebra read_algebra(std::string_view text);
FiniteGroupoid read_groupoid(std::string_view text);
/// Accepts kind "weak-hopf" and kind "groupoid".
WeakHopfSpec read_weak_hopf(std::string_view text, const std::string& default_name = "instance");

struct TwistFile {
  WeakHopfSpec spec;
  Vec u, v;
};
TwistFile read_twist(std::string_view text, const std::filesystem::path& base_dir,
                     const std::string& default_name = "instance");

/// Any of the above by path; twist files yield their spec and pair.
struct Loaded {
  WeakHopfSpec spec;
  std::optional<Vec> u, v;
};
Loaded load(const std::filesystem::path& path);

std::string write_algebra(const Algebra& a);
std::string write_weak_hopf(const WeakHopfSpec& s);
std::string write_groupoid(const FiniteGroupoid& g);
/// With spec_ref empty the spec is written inline.
std::string write_twist(const WeakHopfSpec& s, const Vec& u, const Vec& v, const std::string& spec_ref = {});

/// Comma-separated scalars, e.g. "2,0,0,1" or "1/2+1*i,1".
Vec parse_vector(std::string_view csv, std::size_t dim);
std::string format_vector(const Vec& v);

}  // namespace wha::io

#endif  // WHA_IO_HPP
