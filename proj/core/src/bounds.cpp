#include "gtmm/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace gtmm {

namespace {

constexpr double kBisectLo = 0.0;
constexpr double kBisectHi = 256.0;
constexpr double kBisectTol = 1e-12;
constexpr std::uint64_t kExactLogFactorialLimit = 1'000'000;

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

void flag_vacuous(BoundReport& r) {
  if (r.omega_bound > 3.0) {
    r.vacuous = true;
    if (!r.notes.empty()) r.notes += "; ";
    r.notes += "vacuous (omega <= 3 unconditionally)";
  }
}

}  // namespace

double exponent_from_rank(const MatMulTensor& shape, std::uint64_t r) {
  if (r < 1) throw DomainError("rank bound must be at least 1");
  const std::uint64_t size = shape.size();
  if (size == 1) {
    throw DomainError("the unit tensor carries no exponent information");
  }
  return 3.0 * std::log(static_cast<double>(r)) /
         std::log(static_cast<double>(size));
}

std::uint64_t abelian_capacity(const Group& g) {
  if (!g.abelian()) {
    throw DomainError("capacity of non-Abelian " + g.name() +
                      " is out of scope; only the Abelian case |G| is "
                      "evaluated directly");
  }
  return g.order();
}

PseudoExponentResult pseudo_exponent(std::span<const double> sizes,
                                     double capacity) {
  if (sizes.empty()) throw DomainError("no tensor sizes given");
  bool any_nontrivial = false;
  for (double s : sizes) {
    if (!(s >= 1.0)) throw DomainError("tensor sizes must be at least 1");
    if (s > 1.0) any_nontrivial = true;
  }
  if (!any_nontrivial) {
    throw DomainError("all sizes equal 1; the equation is degenerate");
  }
  const double count = static_cast<double>(sizes.size());
  if (capacity < count) {
    throw InfeasibleError("capacity " + fmt(capacity) + " below the " +
                          fmt(count) + " needed at omega = 0");
  }
  const auto lhs = [&sizes](double w) {
    double sum = 0.0;
    for (double s : sizes) sum += std::exp((w / 3.0) * std::log(s));
    return sum;
  };
  double lo = kBisectLo, hi = kBisectHi;
  if (lhs(hi) < capacity) {
    throw DomainError("capacity outside the bisection bracket [0, 256]");
  }
  while (hi - lo > kBisectTol) {
    const double mid = 0.5 * (lo + hi);
    if (lhs(mid) < capacity) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double w = 0.5 * (lo + hi);
  return {w, std::fabs(lhs(w) - capacity)};
}

double square_family_bound(double order, double count, double side) {
  if (!(order >= 1.0)) throw DomainError("group order must be at least 1");
  if (!(count >= 1.0)) throw DomainError("tensor count must be at least 1");
  if (!(side >= 2.0)) throw DomainError("tensor side must be at least 2");
  return (std::log(order) - std::log(count)) / std::log(side);
}

namespace {

double wreath_core(double h_order, std::uint64_t degree, double log_size_sum,
                   double log_k) {
  if (!(h_order >= 2.0)) {
    throw DomainError("base group order must be at least 2");
  }
  if (degree < 1) throw DomainError("wreath degree must be at least 1");
  if (!(log_size_sum > 0.0)) {
    throw DomainError("the tensor size product must exceed 1");
  }
  const double numerator = static_cast<double>(degree) * std::log(h_order) -
                           log_factorial(degree) - log_k;
  return numerator / (log_size_sum / 3.0);
}

double log_size_sum(std::span<const TensorSize> sizes) {
  if (sizes.empty()) throw DomainError("no tensor sizes given");
  double sum = 0.0;
  for (const TensorSize& s : sizes) {
    if (!(s.m >= 1.0 && s.p >= 1.0 && s.q >= 1.0)) {
      throw DomainError("tensor components must be at least 1");
    }
    sum += std::log(s.m) + std::log(s.p) + std::log(s.q);
  }
  return sum;
}

double log_size_uniform(const TensorSize& s, std::uint64_t copies) {
  if (copies < 1) throw DomainError("need at least one tensor copy");
  if (!(s.m >= 1.0 && s.p >= 1.0 && s.q >= 1.0)) {
    throw DomainError("tensor components must be at least 1");
  }
  return static_cast<double>(copies) *
         (std::log(s.m) + std::log(s.p) + std::log(s.q));
}

double check_family_count(double k, std::uint64_t degree) {
  if (!(k >= 1.0)) throw DomainError("family count k must be at least 1");
  const double log_full = 3.0 * log_factorial(degree);
  const double log_k = std::log(k);
  if (log_k > log_full * (1.0 + 1e-12) + 1e-9) {
    throw DomainError("family count k exceeds (n!)^3");
  }
  return log_k;
}

}  // namespace

double wreath_bound(double h_order, std::uint64_t degree,
                    std::span<const TensorSize> sizes) {
  return wreath_core(h_order, degree, log_size_sum(sizes), 0.0);
}

double wreath_bound_uniform(double h_order, std::uint64_t degree,
                            const TensorSize& size, std::uint64_t copies) {
  return wreath_core(h_order, degree, log_size_uniform(size, copies), 0.0);
}

double wreath_family_bound(double h_order, std::uint64_t degree, double k,
                           std::span<const TensorSize> sizes) {
  return wreath_core(h_order, degree, log_size_sum(sizes),
                     check_family_count(k, degree));
}

double wreath_family_bound_uniform(double h_order, std::uint64_t degree,
                                   double k, const TensorSize& size,
                                   std::uint64_t copies) {
  return wreath_core(h_order, degree, log_size_uniform(size, copies),
                     check_family_count(k, degree));
}

double log_factorial(std::uint64_t n) {
  if (n <= 1) return 0.0;
  if (n <= kExactLogFactorialLimit) {
    // Compensated summation keeps the full double precision over 10^6 terms.
    double sum = 0.0, comp = 0.0;
    for (std::uint64_t i = 2; i <= n; ++i) {
      const double term = std::log(static_cast<double>(i)) - comp;
      const double next = sum + term;
      comp = (next - sum) - term;
      sum = next;
    }
    return sum;
  }
  // Stirling series; the truncation remainder at n > 10^6 is far below
  // double precision.
  const double x = static_cast<double>(n);
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  return x * std::log(x) - x + 0.5 * std::log(2.0 * M_PI * x) +
         inv / 12.0 - inv * inv2 / 360.0 + inv * inv2 * inv2 / 1260.0;
}

double scan_formula_value(ScanFormula formula, std::uint64_t n) {
  if (n < 2) throw DomainError("scan formulas are defined for n >= 2");
  if (n == 2) return std::numeric_limits<double>::infinity();
  const double x = static_cast<double>(n);
  const double ln_n = std::log(x);
  const double ln_n1 = std::log(x - 1.0);
  const double ln_2 = std::log(2.0);
  switch (formula) {
    case ScanFormula::pair:
      return (3.0 * ln_n - ln_2) / ln_n1;
    case ScanFormula::wreath_pair:
      return (6.0 * ln_n - ln_2) / (2.0 * ln_n1);
    case ScanFormula::tower:
      return (3.0 * x * ln_n - x * ln_2 + 1.0) / (x * ln_n1);
  }
  throw DomainError("unknown scan formula");
}

ScanResult scan_minimum(ScanFormula formula, std::uint64_t lo,
                        std::uint64_t hi) {
  if (lo < 2 || hi < lo) throw DomainError("scan range must lie within [2, ...]");
  ScanResult best{0, std::numeric_limits<double>::infinity()};
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const double v = scan_formula_value(formula, n);
    if (v < best.value) best = {n, v};
  }
  if (best.argmin == 0) {
    throw DomainError("no finite value in the scan range");
  }
  return best;
}

BoundReport report_exponent_from_rank(const MatMulTensor& shape,
                                      std::uint64_t r) {
  BoundReport out;
  out.formula = "rank";
  out.parameters = {{"m", std::to_string(shape.m)},
                    {"p", std::to_string(shape.p)},
                    {"q", std::to_string(shape.q)},
                    {"r", std::to_string(r)}};
  out.omega_bound = exponent_from_rank(shape, r);
  flag_vacuous(out);
  return out;
}

BoundReport report_square_family(double order, double count, double side) {
  BoundReport out;
  out.formula = "square-family";
  out.parameters = {{"order", fmt(order)},
                    {"count", fmt(count)},
                    {"side", fmt(side)}};
  out.omega_bound = square_family_bound(order, count, side);
  flag_vacuous(out);
  return out;
}

BoundReport report_wreath_uniform(double h_order, std::uint64_t degree,
                                  const TensorSize& size,
                                  std::uint64_t copies) {
  BoundReport out;
  out.formula = "wreath";
  out.parameters = {{"h_order", fmt(h_order)},
                    {"degree", std::to_string(degree)},
                    {"size", fmt(size.m) + "," + fmt(size.p) + "," + fmt(size.q)},
                    {"copies", std::to_string(copies)}};
  out.omega_bound = wreath_bound_uniform(h_order, degree, size, copies);
  flag_vacuous(out);
  return out;
}

BoundReport report_wreath_family_uniform(double h_order, std::uint64_t degree,
                                         double k, const TensorSize& size,
                                         std::uint64_t copies) {
  BoundReport out;
  out.formula = "wreath-family";
  out.parameters = {{"h_order", fmt(h_order)},
                    {"degree", std::to_string(degree)},
                    {"k", fmt(k)},
                    {"size", fmt(size.m) + "," + fmt(size.p) + "," + fmt(size.q)},
                    {"copies", std::to_string(copies)}};
  out.omega_bound =
      wreath_family_bound_uniform(h_order, degree, k, size, copies);
  const double log_full = 3.0 * log_factorial(degree);
  if (degree >= 2 && std::log(k) >= log_full * (1.0 - 1e-12)) {
    out.hypothetical_k = true;
    out.notes =
        "hypothetical-k: the full (n!)^3 permutation family does not "
        "satisfy the simultaneous property";
  }
  flag_vacuous(out);
  return out;
}

BoundReport report_pseudo_exponent(std::span<const double> sizes,
                                   double capacity) {
  BoundReport out;
  out.formula = "pseudo-exponent";
  std::ostringstream list;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0) list << ",";
    list << fmt(sizes[i]);
  }
  out.parameters = {{"sizes", list.str()}, {"capacity", fmt(capacity)}};
  const PseudoExponentResult r = pseudo_exponent(sizes, capacity);
  out.omega_bound = r.omega;
  out.residual = r.residual;
  flag_vacuous(out);
  return out;
}

}  // namespace gtmm
