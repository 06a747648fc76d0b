#include "twistlat/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "twistlat/double_plane.hpp"

namespace twistlat {

namespace {

constexpr long kMaxBound = 1'000'000;
constexpr std::int64_t kMaxEntry = 1'000'000'000'000;
constexpr long kMaxModulus = 256;

struct ExtendedGcd {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};

// a x + b y = g with g >= 0.
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_x, x) = std::pair{x, old_x - q * x};
    std::tie(old_y, y) = std::pair{y, old_y - q * y};
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

// v1 with v1 . w = 1, given gcd(w) = 1.
Vector3 bezout_vector(const Vector3& w) {
  const ExtendedGcd first = extended_gcd(w[0], w[1]);
  const ExtendedGcd second = extended_gcd(first.g, w[2]);
  return {second.x * first.x, second.x * first.y, second.y};
}

__extension__ using Wide = __int128;

Wide quadratic_value(const Matrix3& gram, const Vector3& v) {
  Wide total = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      total += static_cast<Wide>(v[i]) * gram[i][j] * v[j];
    }
  }
  return total;
}

// Visits the shell |x|+|y|+|z| = s inside the box in decreasing lexicographic order.
// Stops early when visit returns true.
template <typename Visit>
bool for_each_in_shell(long s, long bound, Visit&& visit) {
  const long x_max = std::min(s, bound);
  for (long x = x_max; x >= -x_max; --x) {
    const long r1 = s - std::abs(x);
    const long y_max = std::min(r1, bound);
    for (long y = y_max; y >= -y_max; --y) {
      const long r2 = r1 - std::abs(y);
      if (r2 > bound) continue;
      if (visit(Vector3{x, y, r2})) return true;
      if (r2 != 0 && visit(Vector3{x, y, -r2})) return true;
    }
  }
  return false;
}

std::optional<PointPair> search_shell(const Matrix3& gram, long s, long bound) {
  std::optional<PointPair> found;
  for_each_in_shell(s, bound, [&](const Vector3& v2) {
    if (quadratic_value(gram, v2) != 0) return false;
    const Vector3 w = matrix_vector_product(gram, v2);
    if (std::gcd(std::gcd(w[0], w[1]), w[2]) != 1) return false;
    found = PointPair{bezout_vector(w), v2};
    return true;
  });
  return found;
}

void check_modulus(long modulus) {
  if (modulus < 2 || modulus > kMaxModulus) {
    throw std::invalid_argument("modulus must lie in [2, " + std::to_string(kMaxModulus) + "], got " +
                                std::to_string(modulus));
  }
}

Matrix3 reduce(const Matrix3& gram, long modulus) {
  Matrix3 reduced{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      reduced[i][j] = ((gram[i][j] % modulus) + modulus) % modulus;
    }
  }
  return reduced;
}

// Divisors >= 2 of a prime power p^k, ascending.
std::vector<long> prime_power_divisors(long modulus) {
  long p = 2;
  while (modulus % p != 0) ++p;
  std::vector<long> divisors;
  for (long d = p; d <= modulus && modulus % d == 0; d *= p) divisors.push_back(d);
  return divisors;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::admits:
      return "admits";
    case VerdictKind::obstructed:
      return "obstructed";
    case VerdictKind::unknown:
      return "unknown";
  }
  return "unknown";
}

std::int64_t pairing(const Matrix3& gram, const Vector3& u, const Vector3& v) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) total += u[i] * gram[i][j] * v[j];
  }
  return total;
}

Vector3 matrix_vector_product(const Matrix3& gram, const Vector3& v) {
  Vector3 out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = gram[i][0] * v[0] + gram[i][1] * v[1] + gram[i][2] * v[2];
  }
  return out;
}

bool is_point_pair(const Matrix3& gram, const PointPair& pair) {
  return pairing(gram, pair.v1, pair.v2) == 1 && pairing(gram, pair.v2, pair.v2) == 0;
}

std::optional<PointPair> point_pair_search(const Matrix3& gram, long bound, unsigned workers) {
  if (bound < 1 || bound > kMaxBound) {
    throw std::invalid_argument("search bound must lie in [1, " + std::to_string(kMaxBound) + "]");
  }
  for (const auto& row : gram) {
    for (std::int64_t entry : row) {
      if (entry > kMaxEntry || entry < -kMaxEntry) throw std::invalid_argument("Gram entry out of range");
    }
  }

  const long last_shell = 3 * bound;
  if (workers <= 1) {
    for (long s = 1; s <= last_shell; ++s) {
      if (auto hit = search_shell(gram, s, bound)) return hit;
    }
    return std::nullopt;
  }

  // Shells are dealt round-robin; a worker stops once its next shell lies beyond
  // the smallest shell with a hit so far. Every shell below the final best is
  // scanned, so the merged result matches the sequential order.
  std::atomic<long> best_shell{std::numeric_limits<long>::max()};
  std::vector<std::optional<PointPair>> hits(workers);
  std::vector<long> hit_shells(workers, std::numeric_limits<long>::max());
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (long s = 1 + static_cast<long>(w); s <= last_shell; s += static_cast<long>(workers)) {
          if (s > best_shell.load()) return;
          if (auto hit = search_shell(gram, s, bound)) {
            hits[w] = hit;
            hit_shells[w] = s;
            long current = best_shell.load();
            while (s < current && !best_shell.compare_exchange_weak(current, s)) {
            }
            return;
          }
        }
      });
    }
  }
  const auto best = std::min_element(hit_shells.begin(), hit_shells.end());
  return hits[static_cast<std::size_t>(best - hit_shells.begin())];
}

std::vector<long> certificate_moduli(long max_modulus) {
  std::vector<long> moduli;
  for (long p = 2; p <= max_modulus; ++p) {
    if (!is_prime(p)) continue;
    for (long q = p; q <= max_modulus; q *= p) moduli.push_back(q);
  }
  return moduli;
}

std::optional<ModularCertificate> certificate_search(const Matrix3& gram, long max_modulus,
                                                     std::vector<long>* moduli_tried) {
  check_modulus(max_modulus);
  for (long modulus : certificate_moduli(max_modulus)) {
    if (moduli_tried) moduli_tried->push_back(modulus);
    const Matrix3 g = reduce(gram, modulus);
    const std::vector<long> divisors = prime_power_divisors(modulus);
    // alive[k]: divisors[k] has no counterexample yet. Divisors form a chain, so
    // the survivors are always a prefix.
    std::size_t alive = divisors.size();
    for (long x = 0; x < modulus && alive > 0; ++x) {
      for (long y = 0; y < modulus && alive > 0; ++y) {
        for (long z = 0; z < modulus && alive > 0; ++z) {
          Vector3 w{};
          for (std::size_t i = 0; i < 3; ++i) w[i] = (g[i][0] * x + g[i][1] * y + g[i][2] * z) % modulus;
          if ((x * w[0] + y * w[1] + z * w[2]) % modulus != 0) continue;
          while (alive > 0) {
            const long delta = divisors[alive - 1];
            if (w[0] % delta == 0 && w[1] % delta == 0 && w[2] % delta == 0) break;
            --alive;
          }
        }
      }
    }
    if (alive > 0) return ModularCertificate{modulus, divisors.front()};
  }
  return std::nullopt;
}

bool verify_certificate(const Matrix3& gram, const ModularCertificate& certificate) {
  const long modulus = certificate.modulus;
  const long divisor = certificate.divisor;
  check_modulus(modulus);
  if (divisor < 2 || modulus % divisor != 0) {
    throw std::invalid_argument("certificate divisor " + std::to_string(divisor) + " does not divide modulus " +
                                std::to_string(modulus));
  }
  Matrix3 residues{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) residues[i][j] = ((gram[i][j] % modulus) + modulus) % modulus;
  }
  for (long x = 0; x < modulus; ++x) {
    for (long y = 0; y < modulus; ++y) {
      for (long z = 0; z < modulus; ++z) {
        const Vector3 u{x, y, z};
        const std::int64_t q = pairing(residues, u, u);
        if (q % modulus != 0) continue;
        const Vector3 w = matrix_vector_product(residues, u);
        for (std::int64_t entry : w) {
          if (entry % divisor != 0) return false;
        }
      }
    }
  }
  return true;
}

ObstructionVerdict decide(const Matrix3& gram, long search_bound, long max_modulus, unsigned workers) {
  ObstructionVerdict verdict;
  verdict.search_bound = search_bound;
  verdict.max_modulus = max_modulus;
  if (auto pair = point_pair_search(gram, search_bound, workers)) {
    verdict.kind = VerdictKind::admits;
    verdict.pair = pair;
    return verdict;
  }
  if (auto certificate = certificate_search(gram, max_modulus, &verdict.moduli_tried)) {
    verdict.kind = VerdictKind::obstructed;
    verdict.certificate = certificate;
    return verdict;
  }
  verdict.kind = VerdictKind::unknown;
  return verdict;
}

GramMatrix control_lattice(long d) {
  const SurfaceGeometry geometry = surface_geometry(d);
  const IntersectionData data{};
  const SurfaceClass sqrt_td = todd_and_sqrt(d).second;
  const std::array<SurfaceClass, 3> basis{
      sqrt_td,
      multiply(sqrt_td, SurfaceClass::h(), data),
      multiply(sqrt_td, SurfaceClass::point(), data),
  };
  GramMatrix gram;
  gram.basis = {"1", "h", "pt"};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      gram.entries[i][j] = mukai_pairing(basis[i], basis[j], Rational(geometry.c1_coeff), data).to_int64();
    }
  }
  return gram;
}

}  // namespace twistlat
