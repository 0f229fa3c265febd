#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "conerig/groups.hpp"
#include "conerig/matrix_algebra.hpp"

namespace conerig {

/// Accepted relator residual for a representation read from data.
inline constexpr double tol_rep = 1e-8;

struct Letter {
  int generator = 0;
  int exponent = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Letters in order; the empty word is the identity. Never reduced implicitly.
struct Word {
  std::vector<Letter> letters;

  bool is_identity() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word free_reduce(const Word& w);

/// Uppercase letters are inverses of the lowercase generators in `generators`.
Word parse_word(std::string_view text, std::string_view generators);
std::string format_word(const Word& w, std::string_view generators);

struct Meridian {
  Word word;
  std::string edge_id;
  double cone_angle = 0.0;
};

class Presentation {
public:
  Presentation() = default;
  /// Distinct lowercase letters, one per generator.
  explicit Presentation(std::string generators);

  const std::string& generators() const { return generators_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<Meridian>& meridians() const { return meridians_; }

  Word parse(std::string_view text) const { return parse_word(text, generators_); }
  std::string format(const Word& w) const { return format_word(w, generators_); }

  Presentation& add_relator(std::string_view text);
  Presentation& add_relator(Word w);
  Presentation& add_meridian(std::string_view text, std::string edge_id, double cone_angle);

private:
  std::string generators_;
  std::vector<Word> relators_;
  std::vector<Meridian> meridians_;
};

/// One image per generator, all in the same group.
class Representation {
public:
  Representation() = default;
  Representation(GroupKind kind, std::vector<GroupElement> images);

  GroupKind kind() const { return kind_; }
  const std::vector<GroupElement>& images() const { return images_; }
  const GroupElement& image(int generator) const { return images_.at(generator); }
  int generator_count() const { return static_cast<int>(images_.size()); }

private:
  GroupKind kind_ = GroupKind::SL2C;
  std::vector<GroupElement> images_;
};

/// One algebra vector per generator.
struct Cocycle {
  std::vector<AlgebraVector> values;

  /// Concatenated real coordinates, generator-major.
  Eigen::VectorXd to_real() const;
  static Cocycle from_real(GroupKind kind, int generators, const Eigen::VectorXd& c);
};

GroupElement evaluate(const Representation& rho, const Word& w);

/// max_i ||rho(r_i) - id||_F (summed in quadrature over factors).
double relator_residual(const Representation& rho, const Presentation& p);

/// Throws InvalidRepresentation unless generator counts match and the residual is <= tol.
void require_representation(const Representation& rho, const Presentation& p, double tol = tol_rep);

/// z extended by z(ab) = z(a) + Ad(rho(a)) z(b) and z(g^-1) = -Ad(rho(g)^-1) z(g).
AlgebraVector extend_cocycle(const Representation& rho, const Cocycle& z, const Word& w);

/// Real (|relators| d) x (n d) matrix of the linearized relators; its kernel is Z^1.
Eigen::MatrixXd relator_jacobian(const Representation& rho, const Presentation& p,
                                 double tol = tol_rep);

/// The factor representation (kind SU2) of an SU2xSU2 representation, factor 0 or 1.
Representation factor(const Representation& rho, int which);

}  // namespace conerig
