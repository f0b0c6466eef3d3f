/**
 * @file instance.hpp
 * @brief Seeded random instance generation, the bundled illustrative
 *        fixture, and instance / front file I/O.
 *
 * The generator uses the minimal-standard multiplicative Lehmer stream,
 * one stream per objective and per constraint, so instances are a pure
 * function of their spec. The instance file format is a versioned
 * human-readable key/value + matrix-block document (see docs/formats.md).
 */

#ifndef EPSFRONT_INSTANCE_HPP
#define EPSFRONT_INSTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "epsfront/model.hpp"

namespace epsfront {

/// Minimal-standard multiplicative congruential generator,
/// s <- 16807 * s mod (2^31 - 1).
class LehmerStream {
  public:
    explicit LehmerStream(std::int64_t seed);

    /// Next raw state value in [1, 2^31 - 2].
    std::int64_t next_raw();

    /// Uniform draw in [lo, hi] via scaled mapping of the raw value.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi);

  private:
    std::int64_t state_;
};

enum class VarKind { Binary, Integer };

struct GeneratorSpec {
    int num_objectives = 3;
    int num_vars = 10;
    int num_constraints = 1;
    VarKind var_kind = VarKind::Binary;
    std::int64_t coeff_lo = 1;
    std::int64_t coeff_hi = 100;
    std::vector<std::int64_t> objective_seeds;   ///< one per objective
    std::vector<std::int64_t> constraint_seeds;  ///< one per constraint
    std::int64_t seed_increment = 5;
    std::int64_t instance_index = 0;

    void validate() const;
};

/// Deterministic instance from a spec: coefficients drawn per-stream,
/// rhs_i = floor(sum_j A[i][j] / 2), effective seeds offset by
/// seed_increment * instance_index.
MoilpProblem generate(const GeneratorSpec& spec);

/// The 7-variable, 7-constraint, 3-objective worked example shipped as a
/// fixture (ideal (24,49,42), individual-minimum nadir (-28,-28,-48)).
MoilpProblem illustrative_fixture();

void save_instance(const MoilpProblem& problem, const std::string& path);
MoilpProblem load_instance(const std::string& path);
void write_instance(const MoilpProblem& problem, std::ostream& out);
MoilpProblem read_instance(std::istream& in);  ///< throws ParseError

/// CSV of outcome points: header z_1..z_p[,strategy,iteration].
void write_front_csv(const std::vector<OutcomeVector>& points,
                     const std::string& path,
                     const std::string& strategy_label = "");
std::vector<OutcomeVector> read_front_csv(const std::string& path);

}  // namespace epsfront

#endif  // EPSFRONT_INSTANCE_HPP
