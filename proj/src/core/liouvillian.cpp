#include "superlum/liouvillian.hpp"

namespace superlum {

double Liouvillian::norm_inf() const {
  return matrix.cwiseAbs().rowwise().sum().maxCoeff();
}

Liouvillian assemble_liouvillian(const SystemParams& p) {
  validate(p);

  const Complex I(0.0, 1.0);
  const double g1 = p.gamma1;
  const double g2 = p.gamma2;
  const double R = p.pump_R;
  const double wp = p.omega_p;
  const double wc = p.omega_c;
  const double dp = p.delta_p;
  const double dc = p.delta_c;

  Liouvillian L;
  auto& m = L.matrix;

  // d rho11 = g1 rho33 + i wp (rho31 - rho13) - R rho11
  m(k11, k33) = g1;
  m(k11, k31) = I * wp;
  m(k11, k13) = -I * wp;
  m(k11, k11) = -R;

  // d rho22 = g2 rho33 + i wc (rho32 - rho23)
  m(k22, k33) = g2;
  m(k22, k32) = I * wc;
  m(k22, k23) = -I * wc;

  // d rho33 = -(d rho11 + d rho22)
  m.row(k33) = -(m.row(k11) + m.row(k22));

  // d rho21 = -[R/2 + i(dc - dp)] rho21 + i wc rho31 - i wp rho23
  m(k21, k21) = -(R / 2.0 + I * (dc - dp));
  m(k21, k31) = I * wc;
  m(k21, k23) = -I * wp;

  // d rho31 = [i dp - (g1 + g2 + R)/2] rho31 + i wc rho21 - i wp (rho33 - rho11)
  m(k31, k31) = I * dp - (g1 + g2 + R) / 2.0;
  m(k31, k21) = I * wc;
  m(k31, k33) = -I * wp;
  m(k31, k11) = I * wp;

  // d rho32 = [i dc - (g1 + g2)/2] rho32 + i wp rho12 - i wc (rho33 - rho22)
  m(k32, k32) = I * dc - (g1 + g2) / 2.0;
  m(k32, k12) = I * wp;
  m(k32, k33) = -I * wc;
  m(k32, k22) = I * wc;

  // Conjugate equations: d rho_ji = conj(d rho_ij). Conjugating a term
  // c * rho_kl gives conj(c) * rho_lk.
  const auto mirror = [](int k) {
    switch (k) {
      case k21: return int(k12);
      case k12: return int(k21);
      case k31: return int(k13);
      case k13: return int(k31);
      case k32: return int(k23);
      case k23: return int(k32);
      default: return k;
    }
  };
  for (int src : {int(k21), int(k31), int(k32)}) {
    const int dst = mirror(src);
    for (int col = 0; col < kStateSize; ++col) {
      m(dst, mirror(col)) = std::conj(m(src, col));
    }
  }
  return L;
}

}  // namespace superlum
