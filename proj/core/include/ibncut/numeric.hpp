#ifndef IBNCUT_NUMERIC_HPP
#define IBNCUT_NUMERIC_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ibncut {

// All exact arithmetic runs on GMP. Nothing in the computation path is
// allowed to round.
using Int = mpz_class;
using Rat = mpq_class;

enum class ErrorCode {
  non_square,
  singular,
  rank_deficient,
  not_full_rank,
  not_pointed,
  non_primitive,
  empty,
  empty_hull,
  unbounded_no_box,
  parse_error,
  too_large,
  cap_exceeded,
  unknown_suite,
  bad_input,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::non_square: return "NON_SQUARE";
    case ErrorCode::singular: return "SINGULAR";
    case ErrorCode::rank_deficient: return "RANK_DEFICIENT";
    case ErrorCode::not_full_rank: return "NOT_FULL_RANK";
    case ErrorCode::not_pointed: return "NOT_POINTED";
    case ErrorCode::non_primitive: return "NON_PRIMITIVE";
    case ErrorCode::empty: return "EMPTY";
    case ErrorCode::empty_hull: return "EMPTY_HULL";
    case ErrorCode::unbounded_no_box: return "UNBOUNDED_NO_BOX";
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::too_large: return "TOO_LARGE";
    case ErrorCode::cap_exceeded: return "CAP_EXCEEDED";
    case ErrorCode::unknown_suite: return "UNKNOWN_SUITE";
    case ErrorCode::bad_input: return "BAD_INPUT";
  }
  return "UNKNOWN";
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// floor(a/b) for b != 0
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  if (sgn(b) > 0) {
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  } else {
    Int na = -a, nb = -b;
    mpz_fdiv_q(q.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
  }
  return q;
}

inline Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline bool fits_ll(const Int& v) { return v.fits_slong_p(); }

inline std::optional<long long> to_ll(const Int& v) {
  if (!v.fits_slong_p()) return std::nullopt;
  return static_cast<long long>(v.get_si());
}

}  // namespace ibncut

#endif
