#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "mil/invariant.hpp"

namespace mil {

// Verified invariant homogeneous system of parameters, with lazily cached
// Groebner bases of the power ideals (y_1^d, ..., y_n^d). Compute-once,
// read-many; safe to share across threads.
class Hsop {
 public:
  Hsop(Action action, std::vector<Poly> ys, GroebnerOptions opts = {});

  const Action& action() const { return action_; }
  const RingPtr& ring() const { return action_.ring; }
  const std::vector<Poly>& ys() const { return ys_; }
  int n() const { return static_cast<int>(ys_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  int sigma() const { return sigma_; }
  const GroebnerOptions& options() const { return opts_; }
  const GroupClass& group_class() const { return group_class_; }

  const GroebnerBasis& power_basis(int d) const;
  // (y_1 ... y_n)^t
  Poly product_power(int t) const;

 private:
  Action action_;
  std::vector<Poly> ys_;
  std::vector<int> degrees_;
  int sigma_ = 0;
  GroebnerOptions opts_;
  GroupClass group_class_;

  mutable std::mutex mu_;
  mutable std::map<int, GroebnerBasis> bases_;
  mutable std::vector<Poly> products_;
};

// Cech class [numerator / (y_1 ... y_n)^power].
struct CechClass {
  Poly numerator;
  int power = 1;

  int degree(const Hsop& h) const { return numerator.degree() - power * h.sigma(); }
};

// Normalizes per-parameter powers to a common power by scaling the numerator.
CechClass make_cech_class(const Hsop& h, Poly numerator, const std::vector<int>& powers);

bool class_is_zero(const Hsop& h, const CechClass& c);

CechClass transfer_class(const Hsop& h, const CechClass& c);

// Finite-dimensional model of the degree-k strand of top local cohomology of
// the polynomial ring: the internal-degree slice of R/(y_1^d, ..., y_n^d).
struct Strand {
  int k = 0;
  int power = 1;
  int internal_degree = 0;
  std::vector<Monomial> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

uint64_t binomial(int top, int bottom);
// Closed-form dimension of the degree-k strand for the polynomial ring.
uint64_t strand_dim_closed_form(int n, int k);

// Least power d >= min_power realizing the full strand dimension.
Strand build_strand(const Hsop& h, int k, int min_power = 1, int power_budget = 32);

// Coordinates of a representative numerator (at the strand's power) on the
// standard-monomial basis, via normal form.
std::vector<Scalar> strand_coords(const Hsop& h, const Strand& s, const Poly& numerator);
// Coordinates of a class; requires c.power <= s.power.
std::vector<Scalar> class_coords(const Hsop& h, const Strand& s, const CechClass& c);
Poly strand_element(const Hsop& h, const Strand& s, const std::vector<Scalar>& coords);

// Matrix of the induced action of a group element on the strand basis.
Mat act_on_strand(const Hsop& h, const Strand& s, int element_index);
Mat act_on_strand(const Hsop& h, const Strand& s, const Mat& g);

struct StrandReport {
  int k = 0;
  int power = 1;
  int dim_v = 0;
  int dim_w = 0;                  // dim of sum of (1-g) images, generators only
  std::optional<int> rank_h;      // dim_v - dim_w; absent when transvections present
  int rank_fixed = 0;             // dim of the common fixed subspace
};

StrandReport strand_report(const Hsop& h, int k);

std::vector<StrandReport> hilbert_of_h(const Hsop& h, int k_from, int k_to);

// Largest k with nonzero degree-k strand of the invariant ring's top local
// cohomology, searched downward from -n; requires a group without
// transvections.
int a_invariant(const Hsop& h, std::optional<int> search_floor = {});

enum class SplitRule { smallest_index, largest_index };

// Degree -n generator class [det A / (y_1 ... y_n)] via a deterministic
// decomposition y_i = sum_j A_ij x_j.
CechClass socle_class(const Hsop& h, SplitRule rule = SplitRule::smallest_index);

// The unique scalar by which a group element acts on the socle class.
Scalar socle_action_scalar(const Hsop& h, int element_index, SplitRule rule = SplitRule::smallest_index);

// Graded algebra S = P/I given by generators and relations, with an hsop in
// the presented variables; used for direct strand computations cross-checking
// the cokernel route.
class PresentedAlgebra {
 public:
  PresentedAlgebra(RingPtr ambient, std::vector<Poly> relations, std::vector<Poly> hsop,
                   bool cm_asserted, GroebnerOptions opts = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& relations() const { return relations_; }
  const std::vector<Poly>& hsop() const { return hsop_; }
  bool cm_asserted() const { return cm_; }
  int n() const { return static_cast<int>(hsop_.size()); }
  int sigma() const { return sigma_; }
  const GroebnerOptions& options() const { return opts_; }

  // GB of I + (y_1^d, ..., y_n^d); d = 0 gives the GB of I alone.
  const GroebnerBasis& power_basis(int d) const;

  // Top weighted degree of the Artinian reduction S/(y)S.
  int top_reduction_degree() const;

 private:
  RingPtr ring_;
  std::vector<Poly> relations_;
  std::vector<Poly> hsop_;
  bool cm_ = false;
  int sigma_ = 0;
  GroebnerOptions opts_;

  mutable std::mutex mu_;
  mutable std::map<int, GroebnerBasis> bases_;
};

// Rank of the degree-k strand of top local cohomology of S, computed from the
// Artinian reduction S/(y)S by graded duality; requires the Cohen-Macaulay
// assertion (the parameters must be a regular sequence).
int direct_strand_rank(const PresentedAlgebra& pa, int k);

int a_invariant_presented(const PresentedAlgebra& pa, std::optional<int> search_floor = {});

}  // namespace mil
