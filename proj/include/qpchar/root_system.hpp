#ifndef QPCHAR_ROOT_SYSTEM_HPP
#define QPCHAR_ROOT_SYSTEM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qpchar/rational.hpp"

namespace qpchar {

/// Integer weight or root in simple-root coordinates.
using Weight = std::vector<int>;

enum class Family { A, B, C, D, E, F, G };

struct LieType {
    Family family = Family::A;
    int rank = 1;

    /// Accepts "A5", "B3", "G2", ... Throws std::invalid_argument.
    static LieType parse(std::string_view text);

    std::string name() const;
    bool simply_laced() const { return family == Family::A || family == Family::D || family == Family::E; }

    friend bool operator==(const LieType&, const LieType&) = default;
};

/// Thrown for family/rank combinations without a Dynkin diagram.
class InvalidLieType : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite root system with the node labels of the usual Dynkin figures
/// (B_l: alpha_l short; C_l: alpha_1 long; F_4: alpha_3, alpha_4 short;
/// G_2: alpha_2 short). Long roots have squared length 2.
///
/// Colors are 1-based in every function taking a color index; vectors in
/// this struct are stored 0-based.
struct RootSystem {
    LieType type;
    RationalMatrix pairing;         ///< <alpha_i, alpha_r>
    RationalMatrix coroot_pairing;  ///< <alpha_i^vee, alpha_r^vee>
    Eigen::MatrixXi cartan;         ///< a_ir = <alpha_i^vee, alpha_r>
    std::vector<int> nu;            ///< 2 / <alpha_i, alpha_i>, in {1, 2, 3}
    std::vector<int> marks;         ///< theta = sum a_i alpha_i
    std::vector<int> comarks;       ///< theta^vee = sum a_i^vee alpha_i^vee
    std::vector<int> allowed_j;     ///< nodes with comark 1
    std::vector<int> i_prime;       ///< neighbour used by the interaction term; 0 for color 1
    std::vector<Weight> positive_roots;

    int rank() const { return type.rank; }
    int coxeter_number() const;
    int dual_coxeter_number() const;

    /// Exact <a, b> for a, b in simple-root coordinates.
    Rational pair(const Weight& a, const Weight& b) const;
    Rational norm(const Weight& a) const { return pair(a, a); }
};

/// Builds the root system; throws InvalidLieType for invalid combinations.
RootSystem build(const LieType& type);

/// omega_j in simple-root coordinates (1-based j), from <alpha_i^vee, omega_j> = delta_ij.
RationalVector fundamental_weight(const RootSystem& rs, int j);

/// lcm of the denominators of the pairing matrix.
std::int64_t pairing_denominator(const RootSystem& rs);

/// k_alpha_i = 2k / <alpha_i, alpha_i>.
int k_alpha(const RootSystem& rs, int i, int k);

struct LevelConstants {
    int nu = 1;
    std::optional<int> mu;
    std::optional<int> i_prime;
};

LevelConstants level_constants(const RootSystem& rs, int i, int k);

/// Rectangular highest weight k0 Lambda_0 + kj Lambda_j.
struct HighestWeight {
    int k0 = 1;
    int kj = 0;
    int j = 1;  ///< 1-based node; 0 only for E_8 where no node qualifies

    int level() const { return k0 + kj; }
    friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

/// Validates and normalizes (j is set to the smallest allowed node when kj = 0).
/// Throws std::invalid_argument when k <= 0 or kj > 0 with j not allowed.
HighestWeight make_weight(const RootSystem& rs, int k0, int kj, int j);

/// Parses "k0,kj,j" and validates against rs.
HighestWeight parse_weight(const RootSystem& rs, std::string_view text);

/// Where the j_t window starts. `plus` is nu_j k0 + (nu_j - 1) kj + 1 (the
/// quasi-particle initial conditions); `minus` is nu_j k0 - (nu_j - 1) kj + 1
/// (the B_P exponent). The two agree whenever alpha_j is long.
enum class WindowSign { plus, minus };

inline constexpr WindowSign default_window_sign = WindowSign::plus;

WindowSign parse_window_sign(std::string_view text);
std::string to_string(WindowSign sign);

/// First charge t at which j_t = j. Clamped below at 1; a value
/// k_alpha_j + 1 means the window is empty.
int window_start(const RootSystem& rs, const HighestWeight& w, WindowSign sign = default_window_sign);

/// j_t: returns j if t lies in the window, else 0. Throws for t outside [1, k_alpha_j].
int j_window(const RootSystem& rs, const HighestWeight& w, int t, WindowSign sign = default_window_sign);

}  // namespace qpchar

#endif  // QPCHAR_ROOT_SYSTEM_HPP
