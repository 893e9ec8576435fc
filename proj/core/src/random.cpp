#include "qwitt/random.hpp"

#include <vector>

namespace qwitt {

QRational SampleSource::coefficient() {
  switch (uniform(0, 7)) {
    case 0: return QRational(1);
    case 1: return QRational(-1);
    case 2: return QRational(2);
    case 3: return QRational(-2);
    case 4: return QRational(Rational(1, 2));
    case 5: return QRational(Rational(-1, 2));
    case 6: return q_;
    default: return q_.inverse();
  }
}

LaurentPoly SampleSource::laurent(Window w, int max_terms) {
  LaurentPoly p;
  const int n = uniform(0, max_terms);
  for (int i = 0; i < n; ++i) {
    const int e = uniform(w.lo, w.hi);
    p.add_term(e, coefficient());
  }
  return p;
}

LaurentPoly SampleSource::nonzero_laurent(Window w, int max_terms) {
  for (;;) {
    LaurentPoly p;
    const int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) {
      const int e = uniform(w.lo, w.hi);
      p.add_term(e, coefficient());
    }
    if (!p.is_zero()) return p;
  }
}

LaurentPoly SampleSource::homogeneous(Window w, int modulus, int residue, int max_terms) {
  std::vector<int> exps;
  for (int e = w.lo; e <= w.hi; ++e)
    if (((e - residue) % modulus + modulus) % modulus == 0) exps.push_back(e);
  if (exps.empty()) exps.push_back(residue);
  for (;;) {
    LaurentPoly p;
    const int n = uniform(1, max_terms);
    for (int i = 0; i < n; ++i) {
      const int e = exps[static_cast<std::size_t>(uniform(0, static_cast<int>(exps.size()) - 1))];
      p.add_term(e, coefficient());
    }
    if (!p.is_zero()) return p;
  }
}

}  // namespace qwitt
