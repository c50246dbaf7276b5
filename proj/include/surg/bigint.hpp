#ifndef SURG_BIGINT_HPP
#define SURG_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace surg {

/// Arbitrary-precision signed integer, base 2^16. Supports what exact Smith
/// normal form reduction needs: ring arithmetic, truncated division and
/// magnitude comparison.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    BigInt abs() const;

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    /// Truncated toward zero; remainder carries the dividend's sign.
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;

    /// -1, 0, 1 comparing |a| with |b|.
    static int compare_magnitude(const BigInt& a, const BigInt& b);

    std::string to_string() const;
    /// Throws std::overflow_error when out of range.
    long long to_long_long() const;

  private:
    int sign_ = 0;                // -1, 0, +1
    std::vector<uint32_t> mag_;   // little-endian base-2^16 limbs

    void trim();
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>&, const std::vector<uint32_t>&);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>&, const std::vector<uint32_t>&);
    static int cmp_mag(const std::vector<uint32_t>&, const std::vector<uint32_t>&);
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
};

}  // namespace surg

#endif
