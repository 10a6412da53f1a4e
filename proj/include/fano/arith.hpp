#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace fano {

using Int = mpz_class;
using Rat = mpq_class;

enum class ErrorCode {
  NotFano,
  Degenerate,
  DegenerateCone,
  BadInput,
  NoMutation,
  NoTCones,
  SizeMismatch,
  NotTriangle,
  NonResidualEntry,
  Unsupported,
  InconsistentHilbert,
  ParseError,
  Mismatch,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_name(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct IntVec2 {
  Int x, y;

  IntVec2() = default;
  IntVec2(Int a, Int b) : x(std::move(a)), y(std::move(b)) {}
  IntVec2(long a, long b) : x(a), y(b) {}
  IntVec2(int a, int b) : x(a), y(b) {}

  friend bool operator==(const IntVec2& a, const IntVec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const IntVec2& a, const IntVec2& b) { return !(a == b); }
  friend bool operator<(const IntVec2& a, const IntVec2& b) {
    int c = cmp(a.x, b.x);
    return c < 0 || (c == 0 && a.y < b.y);
  }
  friend IntVec2 operator+(const IntVec2& a, const IntVec2& b) { return {Int(a.x + b.x), Int(a.y + b.y)}; }
  friend IntVec2 operator-(const IntVec2& a, const IntVec2& b) { return {Int(a.x - b.x), Int(a.y - b.y)}; }
  friend IntVec2 operator-(const IntVec2& a) { return {Int(-a.x), Int(-a.y)}; }
  friend IntVec2 operator*(const Int& s, const IntVec2& a) { return {Int(s * a.x), Int(s * a.y)}; }
};

struct RatVec2 {
  Rat x, y;

  RatVec2() = default;
  RatVec2(Rat a, Rat b) : x(std::move(a)), y(std::move(b)) {}
  explicit RatVec2(const IntVec2& v) : x(v.x), y(v.y) {}

  friend bool operator==(const RatVec2& a, const RatVec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const RatVec2& a, const RatVec2& b) { return !(a == b); }
  friend bool operator<(const RatVec2& a, const RatVec2& b) {
    int c = cmp(a.x, b.x);
    return c < 0 || (c == 0 && a.y < b.y);
  }
  friend RatVec2 operator+(const RatVec2& a, const RatVec2& b) { return {Rat(a.x + b.x), Rat(a.y + b.y)}; }
  friend RatVec2 operator-(const RatVec2& a, const RatVec2& b) { return {Rat(a.x - b.x), Rat(a.y - b.y)}; }
  friend RatVec2 operator*(const Rat& s, const RatVec2& a) { return {Rat(s * a.x), Rat(s * a.y)}; }
};

inline Int cross(const IntVec2& a, const IntVec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat cross(const RatVec2& a, const RatVec2& b) { return a.x * b.y - a.y * b.x; }
// pairing of u in M with v in N
inline Int pair(const IntVec2& u, const IntVec2& v) { return u.x * v.x + u.y * v.y; }
inline Rat pair(const RatVec2& u, const RatVec2& v) { return u.x * v.x + u.y * v.y; }
inline Rat pair(const RatVec2& u, const IntVec2& v) { return u.x * v.x + u.y * v.y; }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}
inline Int gcd(const IntVec2& v) { return gcd(v.x, v.y); }
inline bool is_primitive(const IntVec2& v) { return gcd(v) == 1; }

// floor and ceiling of a rational
inline Int floor_q(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}
inline Int ceil_q(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}
// non-negative residue
inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r < 0 ? Int(r + abs(m)) : r;
}
inline Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(ErrorCode::BadInput, "not invertible");
  return r;
}

// s*a + t*b = g = gcd(a,b) >= 0
inline void ext_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline Rat make_rat(const Int& n, const Int& d) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Int& v);
std::string to_string(const Rat& q);
std::string to_string(const IntVec2& v);
std::string to_string(const RatVec2& v);

inline std::size_t hash_int(const Int& v) {
  std::size_t h = std::hash<long>{}(mpz_get_si(v.get_mpz_t()));
  return h ^ (static_cast<std::size_t>(mpz_sizeinbase(v.get_mpz_t(), 2)) * 0x9e3779b97f4a7c15ULL) ^
         static_cast<std::size_t>(sgn(v) + 1);
}

}  // namespace fano
