#include "gradecat/numeric.hpp"

namespace gradecat {

const char* errcode_name(ErrCode c) {
  switch (c) {
    case ErrCode::NonAdmissible: return "NonAdmissible";
    case ErrCode::BadBound: return "BadBound";
    case ErrCode::NotComposable: return "NotComposable";
    case ErrCode::NotFunctorial: return "NotFunctorial";
    case ErrCode::DimensionMismatch: return "DimensionMismatch";
    case ErrCode::SingularBaseChange: return "SingularBaseChange";
    case ErrCode::InvalidGrading: return "InvalidGrading";
    case ErrCode::NotConcatenable: return "NotConcatenable";
    case ErrCode::UnknownBasisRef: return "UnknownBasisRef";
    case ErrCode::NotHomogeneous: return "NotHomogeneous";
    case ErrCode::NotBasisAligned: return "NotBasisAligned";
    case ErrCode::NotSurjective: return "NotSurjective";
    case ErrCode::DegreeOutsideImage: return "DegreeOutsideImage";
    case ErrCode::Disconnected: return "Disconnected";
    case ErrCode::InfiniteGroup: return "InfiniteGroup";
    case ErrCode::GroupTooLarge: return "GroupTooLarge";
    case ErrCode::TooManyPaths: return "TooManyPaths";
    case ErrCode::NotThin: return "NotThin";
    case ErrCode::NotSG: return "NotSG";
    case ErrCode::NotConstricted: return "NotConstricted";
    case ErrCode::NotConnectedResult: return "NotConnectedResult";
    case ErrCode::SquareFails: return "SquareFails";
    case ErrCode::DiagramFails: return "DiagramFails";
    case ErrCode::NotEquivariant: return "NotEquivariant";
    case ErrCode::NoSolution: return "NoSolution";
    case ErrCode::Schema: return "Schema";
    case ErrCode::Usage: return "Usage";
  }
  return "Unknown";
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(ErrCode::Schema, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    fail(ErrCode::Schema, "malformed rational '" + s + "'");
  }
}

std::string rat_str(const Rat& q) { return q.get_str(); }
std::string int_str(const Int& z) { return z.get_str(); }

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Field Field::prime(const Int& p) {
  if (p < 2 || !is_probable_prime(p)) fail(ErrCode::Schema, "field order " + int_str(p) + " is not prime");
  Field f;
  f.kind = Kind::Prime;
  f.p = p;
  return f;
}

Rat Field::normalize(const Rat& x) const {
  if (kind == Kind::Rationals) return x;
  Int num = x.get_num(), den = x.get_den();
  Int dmod = den % p;
  if (dmod == 0) fail(ErrCode::Schema, "denominator of " + rat_str(x) + " vanishes mod " + int_str(p));
  Int dinv;
  mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t());
  Int r = (num % p) * dinv % p;
  if (r < 0) r += p;
  return Rat(r);
}

Rat Field::inv(const Rat& a) const {
  Rat x = normalize(a);
  if (x == 0) fail(ErrCode::NoSolution, "inverse of zero");
  if (kind == Kind::Rationals) return 1 / x;
  Int v = x.get_num();
  Int r;
  mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Rat(r);
}

std::string Field::str() const {
  return kind == Kind::Rationals ? "Q" : "F" + int_str(p);
}

}  // namespace gradecat
