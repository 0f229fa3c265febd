#include <algorithm>
#include <cctype>

#include "conerig/word.hpp"

namespace conerig {

Word inverse(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->generator, -it->exponent});
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().generator == l.generator &&
        out.letters.back().exponent == -l.exponent)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

Word parse_word(std::string_view text, std::string_view generators) {
  Word w;
  w.letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    const bool alpha = std::isalpha(static_cast<unsigned char>(c)) != 0;
    const char lower = alpha ? static_cast<char>(std::tolower(static_cast<unsigned char>(c))) : c;
    const auto pos = alpha ? generators.find(lower) : std::string_view::npos;
    if (pos == std::string_view::npos) throw UnknownGenerator(c, i);
    w.letters.push_back({static_cast<int>(pos), c == lower ? 1 : -1});
  }
  return w;
}

std::string format_word(const Word& w, std::string_view generators) {
  std::string s;
  for (const Letter& l : w.letters) {
    const char c = generators.at(l.generator);
    s += l.exponent > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return s;
}

Presentation::Presentation(std::string generators) : generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const char c = generators_[i];
    if (c < 'a' || c > 'z') throw DomainError(std::string("generator '") + c + "' is not a lowercase letter");
    if (generators_.find(c) != i) throw DomainError(std::string("generator '") + c + "' declared twice");
  }
}

Presentation& Presentation::add_relator(std::string_view text) { return add_relator(parse(text)); }

Presentation& Presentation::add_relator(Word w) {
  relators_.push_back(std::move(w));
  return *this;
}

Presentation& Presentation::add_meridian(std::string_view text, std::string edge_id, double cone_angle) {
  meridians_.push_back({parse(text), std::move(edge_id), cone_angle});
  return *this;
}

Representation::Representation(GroupKind kind, std::vector<GroupElement> images)
    : kind_(kind), images_(std::move(images)) {
  for (const auto& g : images_)
    if (kind_of(g) != kind_) throw DomainError("representation mixes group types");
}

Eigen::VectorXd Cocycle::to_real() const {
  if (values.empty()) return {};
  const int d = algebra_dim(values.front().kind);
  Eigen::VectorXd c(d * static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) c.segment(d * i, d) = conerig::to_real(values[i]);
  return c;
}

Cocycle Cocycle::from_real(GroupKind kind, int generators, const Eigen::VectorXd& c) {
  const int d = algebra_dim(kind);
  if (c.size() != d * generators) throw DomainError("cocycle coordinate vector has wrong length");
  Cocycle z;
  z.values.reserve(generators);
  for (int i = 0; i < generators; ++i) z.values.push_back(algebra_from_real(kind, c.segment(d * i, d)));
  return z;
}

GroupElement evaluate(const Representation& rho, const Word& w) {
  GroupElement g = identity_element(rho.kind());
  for (const Letter& l : w.letters) {
    const GroupElement& x = rho.image(l.generator);
    g = g * (l.exponent > 0 ? x : inverse(x));
  }
  return g;
}

double relator_residual(const Representation& rho, const Presentation& p) {
  double r = 0.0;
  for (const Word& w : p.relators()) r = std::max(r, distance_to_identity(evaluate(rho, w)));
  return r;
}

void require_representation(const Representation& rho, const Presentation& p, double tol) {
  if (rho.generator_count() != p.generator_count())
    throw InvalidRepresentation("representation and presentation have different generator counts", 0.0);
  const double r = relator_residual(rho, p);
  if (!(r <= tol)) throw InvalidRepresentation("relator residual exceeds tolerance", r);
}

AlgebraVector extend_cocycle(const Representation& rho, const Cocycle& z, const Word& w) {
  AlgebraVector acc = AlgebraVector::zero(rho.kind());
  GroupElement prefix = identity_element(rho.kind());
  for (const Letter& l : w.letters) {
    const GroupElement& g = rho.image(l.generator);
    const AlgebraVector& zg = z.values.at(l.generator);
    if (l.exponent > 0) {
      acc += adjoint(prefix, zg);
      prefix = prefix * g;
    } else {
      prefix = prefix * inverse(g);
      acc += -adjoint(prefix, zg);
    }
  }
  return acc;
}

Eigen::MatrixXd relator_jacobian(const Representation& rho, const Presentation& p, double tol) {
  require_representation(rho, p, tol);
  const GroupKind kind = rho.kind();
  const int d = algebra_dim(kind);
  const int n = p.generator_count();
  const int m = static_cast<int>(p.relators().size());
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m * d, n * d);
  Cocycle z;
  z.values.assign(n, AlgebraVector::zero(kind));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < d; ++k) {
      z.values[j] = algebra_basis(kind, k);
      for (int i = 0; i < m; ++i)
        jac.block(i * d, j * d + k, d, 1) = to_real(extend_cocycle(rho, z, p.relators()[i]));
      z.values[j] = AlgebraVector::zero(kind);
    }
  }
  return jac;
}

Representation factor(const Representation& rho, int which) {
  if (rho.kind() != GroupKind::SU2xSU2) throw DomainError("factor() needs an SU2xSU2 representation");
  std::vector<GroupElement> images;
  for (const auto& g : rho.images()) {
    const auto& p = std::get<Su2PairElement<double>>(g);
    images.push_back(which == 0 ? p.left : p.right);
  }
  return Representation(GroupKind::SU2, std::move(images));
}

}  // namespace conerig
