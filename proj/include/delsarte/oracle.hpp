#pragma once

#include "delsarte/schemes.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace delsarte {

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// GF(p^k) with elements 0..size-1 read as base-p digit vectors (polynomials in x),
// reduced by the lexicographically first irreducible monic polynomial of degree k.
class FiniteField {
public:
    explicit FiniteField(long order);

    long order() const { return order_; }
    long characteristic() const { return p_; }
    long degree() const { return k_; }
    const std::vector<long>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[a * order_ + b]; }
    int sub(int a, int b) const { return sub_[a * order_ + b]; }
    int mul(int a, int b) const { return mul_[a * order_ + b]; }
    int neg(int a) const { return sub_[a]; }
    int pow(int a, long e) const;

private:
    long order_, p_, k_;
    std::vector<long> modulus_;  // low degree first, monic
    std::vector<int> add_, sub_, mul_;
};

// (p, k) with p^k = q, or nullopt when q is not a prime power.
std::optional<std::pair<long, long>> prime_power(long q);

// Fraction-free elimination: rows are scaled by pivots instead of divided.
long matrix_rank(const FiniteField& field, std::vector<std::vector<int>> rows);

struct MatrixSchemeInstance {
    Family family = Family::Bilinear;
    long q = 2;
    long n = 1;
    long m = 1;
    long rows = 0, cols = 0;  // matrix shape
    FiniteField field{2};     // F_q, or F_{q^2} for Hermitian forms
    std::vector<std::vector<int>> vertices;  // flattened row-major matrices
    std::vector<int> vertex_class;           // class of vertex - vertex 0 (vertex 0 is the zero matrix)
    // A vertex is a digit vector over its free coordinates (mixed radix, first digit
    // least significant). Kind 0 digits are field elements; kind 1 digits index the
    // subfield F_q inside F_{q^2} (Hermitian diagonal).
    std::vector<std::vector<int>> digits;
    std::vector<int> coord_kind;
    std::vector<long> weight;
    std::vector<std::vector<int>> kind_values;  // digit -> field element
    std::vector<std::vector<int>> kind_sub;     // digit subtraction table, radix*radix

    std::size_t size() const { return vertices.size(); }
    std::size_t difference(std::size_t x, std::size_t y) const;
    int distance(std::size_t x, std::size_t y) const { return vertex_class[difference(x, y)]; }
};

constexpr long kDefaultVertexCap = 4096;
constexpr long kEigenCap = 256;

// For Alternating the size parameter is m (matrix size) and n is ignored.
MatrixSchemeInstance build_instance(Family family, long q, long n, long m, long cap = kDefaultVertexCap);
MatrixSchemeInstance build_instance(const SchemeSpec& spec, long cap = kDefaultVertexCap);

// counts from a base vertex; throws if the three probe base points disagree
std::vector<Rational> empirical_valencies(const MatrixSchemeInstance& inst);

struct EigenCheck {
    std::vector<Rational> eigenvalues;  // P_i(k), k = 0..n, each verified
    bool all_hold = false;
    std::string failure;
};

// Verifies D_i E_k = P_i(k) E_k with E_k = (1/|X|) sum_j Q_k(j) D_j for every k.
EigenCheck empirical_eigenvalues(const MatrixSchemeInstance& inst, const SchemeSpec& spec, long i,
                                 long cap = kEigenCap);

struct CliqueResult {
    long size = 0;
    std::vector<std::size_t> witness;
    bool complete = true;  // false when the node budget ran out
    std::uint64_t nodes = 0;
};

struct CliqueOptions {
    std::uint64_t node_budget = 2'000'000;
};

CliqueResult max_code_bruteforce(const MatrixSchemeInstance& inst, long d, CliqueOptions opts = {});
CliqueResult max_code_bruteforce_serial(const MatrixSchemeInstance& inst, long d, CliqueOptions opts = {});

// Generic max clique on an explicit graph, vertices 0..n-1; parallel over root branches.
CliqueResult max_clique(const std::vector<std::vector<bool>>& adjacency, bool parallel, CliqueOptions opts = {});

struct SubsetReport {
    long trials = 0;
    long failures = 0;
    std::string first_failure;
};

SubsetReport random_subset_dual_check(const MatrixSchemeInstance& inst, const SchemeSpec& spec, long trials,
                                      std::uint64_t seed = 1);

std::vector<Rational> inner_distribution_of(const MatrixSchemeInstance& inst, const std::vector<std::size_t>& subset);

nlohmann::json witness_json(const MatrixSchemeInstance& inst, const std::vector<std::size_t>& witness);

}  // namespace delsarte
