#include "k3fib/fiber.hpp"

#include <cctype>

namespace k3fib {

KodairaType KodairaType::I(int n) {
  if (n < 0) fail(errc::syntax_error, "I_n requires n >= 0");
  return KodairaType(FiberKind::In, n);
}

KodairaType KodairaType::IStar(int n) {
  if (n < 0) fail(errc::syntax_error, "I_n* requires n >= 0");
  return KodairaType(FiberKind::InStar, n);
}

KodairaType KodairaType::additive(FiberKind kind) {
  switch (kind) {
    case FiberKind::II:
    case FiberKind::III:
    case FiberKind::IV:
    case FiberKind::IVStar:
    case FiberKind::IIIStar:
    case FiberKind::IIStar:
      return KodairaType(kind, 0);
    default:
      fail(errc::syntax_error, "additive() expects an unindexed symbol");
  }
}

int KodairaType::euler_number() const {
  switch (kind_) {
    case FiberKind::In: return n_;
    case FiberKind::InStar: return n_ + 6;
    case FiberKind::II: return 2;
    case FiberKind::III: return 3;
    case FiberKind::IV: return 4;
    case FiberKind::IVStar: return 8;
    case FiberKind::IIIStar: return 9;
    case FiberKind::IIStar: return 10;
  }
  return 0;
}

int KodairaType::component_count() const {
  switch (kind_) {
    case FiberKind::In: return n_ >= 2 ? n_ : 1;
    case FiberKind::InStar: return n_ + 5;
    case FiberKind::II: return 1;
    case FiberKind::III: return 2;
    case FiberKind::IV: return 3;
    case FiberKind::IVStar: return 7;
    case FiberKind::IIIStar: return 8;
    case FiberKind::IIStar: return 9;
  }
  return 1;
}

bool KodairaType::is_reduced() const {
  switch (kind_) {
    case FiberKind::In:
    case FiberKind::II:
    case FiberKind::III:
    case FiberKind::IV:
      return true;
    default:
      return false;
  }
}

int KodairaType::order_class() const {
  switch (kind_) {
    case FiberKind::In: return 1;
    case FiberKind::InStar: return 2;
    default: return 0;
  }
}

int KodairaType::order_key() const {
  return order_class() == 0 ? euler_number() : n_;
}

std::string KodairaType::str() const {
  switch (kind_) {
    case FiberKind::In: return "I" + std::to_string(n_);
    case FiberKind::InStar: return "I" + std::to_string(n_) + "*";
    case FiberKind::II: return "II";
    case FiberKind::III: return "III";
    case FiberKind::IV: return "IV";
    case FiberKind::IVStar: return "IV*";
    case FiberKind::IIIStar: return "III*";
    case FiberKind::IIStar: return "II*";
  }
  return "";
}

KodairaType KodairaType::parse(std::string_view text) {
  auto bad = [&]() -> KodairaType {
    fail(errc::syntax_error, "not a fiber symbol: '" + std::string(text) + "'");
  };
  if (text == "II") return additive(FiberKind::II);
  if (text == "III") return additive(FiberKind::III);
  if (text == "IV") return additive(FiberKind::IV);
  if (text == "II*") return additive(FiberKind::IIStar);
  if (text == "III*") return additive(FiberKind::IIIStar);
  if (text == "IV*") return additive(FiberKind::IVStar);
  if (text.size() < 2 || text[0] != 'I') return bad();
  std::string_view digits = text.substr(1);
  bool star = !digits.empty() && digits.back() == '*';
  if (star) digits.remove_suffix(1);
  if (digits.empty()) return bad();
  if (digits.size() > 1 && digits[0] == '0') return bad();  // no leading zeros
  int n = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return bad();
    n = n * 10 + (ch - '0');
    if (n > 1000000) return bad();
  }
  return star ? IStar(n) : I(n);
}

const char* marking_name(TorsionMarking m) {
  switch (m) {
    case TorsionMarking::MeetsTheta0: return "MeetsTheta0";
    case TorsionMarking::MeetsThetaN: return "MeetsThetaN";
    case TorsionMarking::MeetsNear: return "MeetsNear";
    case TorsionMarking::MeetsFar: return "MeetsFar";
    case TorsionMarking::None: return "None";
  }
  return "None";
}

bool marking_legal_for(KodairaType f, TorsionMarking m) {
  switch (m) {
    case TorsionMarking::MeetsTheta0:
    case TorsionMarking::MeetsThetaN:
      return f.kind() == FiberKind::In && f.n() % 2 == 0 && f.n() >= 2;
    case TorsionMarking::MeetsNear:
    case TorsionMarking::MeetsFar:
      return f.kind() == FiberKind::InStar && f.n() % 2 == 0;
    case TorsionMarking::None:
      if (f.kind() == FiberKind::In) return f.n() % 2 == 1 || f.n() == 0;
      if (f.kind() == FiberKind::InStar) return f.n() % 2 == 1;
      return true;
  }
  return false;
}

KodairaType ramified_transform(KodairaType f) {
  if (!f.is_reduced())
    fail(errc::non_reduced_branch,
         "branch fiber " + f.str() + " is not reduced");
  switch (f.kind()) {
    case FiberKind::In: return KodairaType::I(2 * f.n());
    case FiberKind::II: return KodairaType::additive(FiberKind::IV);
    case FiberKind::III: return KodairaType::IStar(0);
    case FiberKind::IV: return KodairaType::additive(FiberKind::IVStar);
    default: break;
  }
  fail(errc::non_reduced_branch, "unreachable");
}

KodairaType isogeny_transform(KodairaType f, TorsionMarking m) {
  switch (f.kind()) {
    case FiberKind::II:
    case FiberKind::IV:
    case FiberKind::IIStar:
    case FiberKind::IVStar:
      fail(errc::unsupported_fiber,
           f.str() + " is incompatible with a 2-torsion section");
    case FiberKind::III:
      fail(errc::unsupported_fiber, "III has no quotient rule");
    default:
      break;
  }
  if (f.kind() == FiberKind::IIIStar) {
    if (m != TorsionMarking::None)
      fail(errc::illegal_marking, "III* takes no component marking");
    return f;
  }
  bool star = f.kind() == FiberKind::InStar;
  int n = f.n();
  // Smooth slot: the quotient of a smooth fiber is smooth, any marking is moot.
  if (!star && n == 0) return KodairaType::I(0);
  if (n % 2 == 1) {
    if (m != TorsionMarking::None)
      fail(errc::illegal_marking,
           f.str() + " has odd index and takes no component marking");
    return star ? KodairaType::IStar(2 * n) : KodairaType::I(2 * n);
  }
  if (!marking_legal_for(f, m))
    fail(errc::illegal_marking, std::string(marking_name(m)) +
                                    " is not a legal marking for " + f.str());
  bool doubles = m == TorsionMarking::MeetsTheta0 || m == TorsionMarking::MeetsNear;
  int image = doubles ? 2 * n : n / 2;
  return star ? KodairaType::IStar(image) : KodairaType::I(image);
}

}  // namespace k3fib
