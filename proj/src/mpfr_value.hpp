#pragma once

#include <mpfr.h>

namespace barning::detail {

class Mpfr {
  public:
    explicit Mpfr(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
    ~Mpfr() { mpfr_clear(value_); }
    Mpfr(const Mpfr &) = delete;
    Mpfr &operator=(const Mpfr &) = delete;

    mpfr_ptr get() { return value_; }

  private:
    mpfr_t value_;
};

} // namespace barning::detail
