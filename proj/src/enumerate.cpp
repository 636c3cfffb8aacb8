#include "regover/enumerate.hpp"

#include <numeric>

#include "regover/errors.hpp"

namespace regover {

namespace {

// 64-bit counts are exact up to this weight (overpartition totals stay
// below 2^63)
constexpr long kMaxEnumWeight = 250;
constexpr long kMaxListWeight = 30;

void check_weight(long n) {
  if (n < 0) throw std::invalid_argument("enumerate: negative weight");
  if (n > kMaxEnumWeight)
    throw EnumerationRange("enumerate: weight exceeds 64-bit-safe range");
}

/* Per-size multiplicity rule: admissible multiplicities are
 * 0, step, 2*step, ..., capped at `cap` (cap = -1: bounded only by the
 * weight). `doubled` marks overpartition counting (a size present in k >= 1
 * copies contributes twice: first copy overlined or not). */
struct MultRule {
  bool forbidden = false;
  long step = 1;
  long cap = -1;
  bool doubled = false;
  bool overlined_only = false;  // single copy, rendered overlined
};

MultRule rule_for(const ClassSpec& spec, long s) {
  const long ell = spec.ell, mu = spec.mu;
  switch (spec.cls) {
    case PartitionClass::Rbar:
      if (s % ell == 0 || s % mu == 0) return {.forbidden = true};
      return {.doubled = true};
    case PartitionClass::RbarStar:
      if (s % ell == 0) return {.cap = 1, .overlined_only = true};
      return {.doubled = true};
    case PartitionClass::A:
      if (s % mu == 0) return {.forbidden = true};
      if (s % ell == 0) return {.cap = ell - 1};
      return {.step = ell, .cap = ell};
    case PartitionClass::B:
      if (s % ell == 0 || s % mu == 0) return {.forbidden = true};
      if (s % 2 == 1) return {.step = 2};
      return {};
    case PartitionClass::C:
      if (s % mu == 0) return {.forbidden = true};
      if (s % 2 == 1) return {.step = 2, .cap = 2 * (ell - 1)};
      return {.cap = ell - 1};
    case PartitionClass::D:
      if (s % ell == 0 || s % (2 * mu) == 0) return {.forbidden = true};
      if (s % 2 == 1) return {.step = 2};
      if (s % (2 * mu) == mu) return {.cap = 1};
      return {};
    case PartitionClass::E:
      if (s % (2 * mu) == 0 || s % (ell * mu) == 0) return {.forbidden = true};
      if (s % 2 == 1) return {.step = 2, .cap = 2 * (ell - 1)};
      if (s % (2 * mu) == mu) return {.cap = 1};
      return {.cap = ell - 1};
    case PartitionClass::F:
      if (s % (ell * ell) == 0 || s % mu == 0) return {.forbidden = true};
      if (s % ell != 0) return {.step = ell, .cap = ell};
      return {};
  }
  return {.forbidden = true};
}

}  // namespace

long Overpartition::weight() const {
  long w = 0;
  for (const auto& [size, over] : parts) w += size;
  return w;
}

std::string render(const Overpartition& p) {
  if (p.parts.empty()) return "()";
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts[i].first);
    if (p.parts[i].second) out += "~";  // overlined part
  }
  return out + ")";
}

std::string class_name(PartitionClass c) {
  switch (c) {
    case PartitionClass::Rbar: return "Rbar";
    case PartitionClass::RbarStar: return "RbarStar";
    case PartitionClass::A: return "A";
    case PartitionClass::B: return "B";
    case PartitionClass::C: return "C";
    case PartitionClass::D: return "D";
    case PartitionClass::E: return "E";
    case PartitionClass::F: return "F";
  }
  return "?";
}

void ClassSpec::validate() const {
  if (ell < 2) throw InapplicableClass("class: ell must be >= 2");
  if (cls == PartitionClass::RbarStar) return;
  if (mu < 2) throw InapplicableClass("class: mu must be >= 2");
  if (std::gcd(ell, mu) != 1)
    throw InapplicableClass("class: ell and mu must be coprime");
  switch (cls) {
    case PartitionClass::B:
      if (ell % 2 == 0 || mu % 2 == 0)
        throw InapplicableClass("class B: ell and mu must both be odd");
      break;
    case PartitionClass::C:
      if (ell % 2 == 0 || mu % 2 == 0 || ell >= mu)
        throw InapplicableClass("class C: need ell, mu odd and ell < mu");
      break;
    case PartitionClass::D:
      if (mu % 2 != 0) throw InapplicableClass("class D: mu must be even");
      break;
    case PartitionClass::E:
      if (mu % 2 != 0 || ell >= mu)
        throw InapplicableClass("class E: need mu even and ell < mu");
      break;
    default:
      break;
  }
}

long class_weight_scale(PartitionClass c, long ell) {
  switch (c) {
    case PartitionClass::A:
    case PartitionClass::F:
      return ell;
    case PartitionClass::B:
    case PartitionClass::C:
    case PartitionClass::D:
    case PartitionClass::E:
      return 2;
    default:
      return 1;
  }
}

bool class_applicable(PartitionClass c, long ell, long mu) {
  switch (c) {
    case PartitionClass::B:
      return ell % 2 == 1 && mu % 2 == 1;
    case PartitionClass::C:
      return ell % 2 == 1 && mu % 2 == 1 && ell < mu;
    case PartitionClass::D:
      return mu % 2 == 0;
    case PartitionClass::E:
      return mu % 2 == 0 && ell < mu;
    default:
      return true;
  }
}

std::uint64_t count_overpartitions(long n) {
  check_weight(n);
  std::vector<std::uint64_t> f(n + 1, 0);
  f[0] = 1;
  for (long s = 1; s <= n; ++s) {
    std::vector<std::uint64_t> nf = f;
    for (long k = 1; k * s <= n; ++k)
      for (long rem = 0; rem + k * s <= n; ++rem)
        nf[rem + k * s] += 2 * f[rem];
    f = std::move(nf);
  }
  return f[n];
}

std::vector<std::uint64_t> class_counts(const ClassSpec& spec,
                                        long max_weight) {
  spec.validate();
  check_weight(max_weight);
  std::vector<std::uint64_t> f(max_weight + 1, 0);
  f[0] = 1;
  for (long s = 1; s <= max_weight; ++s) {
    const MultRule rule = rule_for(spec, s);
    if (rule.forbidden) continue;
    std::vector<std::uint64_t> nf = f;  // multiplicity 0
    for (long k = rule.step; k * s <= max_weight; k += rule.step) {
      if (rule.cap >= 0 && k > rule.cap) break;
      const std::uint64_t w = rule.doubled ? 2 : 1;
      for (long rem = 0; rem + k * s <= max_weight; ++rem)
        nf[rem + k * s] += w * f[rem];
    }
    f = std::move(nf);
  }
  return f;
}

std::uint64_t count_class(const ClassSpec& spec, long n) {
  return class_counts(spec, n)[n];
}

SevenWayReport verify_seven_way(long ell, long mu, long n_max) {
  SevenWayReport rep;
  rep.ell = ell;
  rep.mu = mu;
  rep.n_max = n_max;
  const ClassSpec base{PartitionClass::Rbar, ell, mu};
  base.validate();
  const auto rbar = class_counts(base, n_max);
  for (PartitionClass c :
       {PartitionClass::A, PartitionClass::B, PartitionClass::C,
        PartitionClass::D, PartitionClass::E, PartitionClass::F}) {
    if (!class_applicable(c, ell, mu)) {
      std::string why;
      switch (c) {
        case PartitionClass::B: why = "needs ell, mu odd"; break;
        case PartitionClass::C: why = "needs ell, mu odd and ell < mu"; break;
        case PartitionClass::D: why = "needs mu even"; break;
        case PartitionClass::E: why = "needs mu even and ell < mu"; break;
        default: why = "inapplicable"; break;
      }
      rep.skipped.emplace_back(c, why);
      continue;
    }
    rep.compared.push_back(c);
    const long scale = class_weight_scale(c, ell);
    const auto counts = class_counts({c, ell, mu}, scale * n_max);
    for (long n = 0; n <= n_max; ++n) {
      SevenWayEntry e;
      e.cls = c;
      e.n = n;
      e.weight_arg = scale * n;
      e.class_count = counts[scale * n];
      e.rbar_count = rbar[n];
      e.match = (e.class_count == e.rbar_count);
      if (!e.match) ++rep.mismatches;
      rep.entries.push_back(e);
    }
  }
  rep.all_match = (rep.mismatches == 0);
  return rep;
}

namespace {

void list_rec(const ClassSpec& spec, long s, long rem, Overpartition& cur,
              std::vector<Overpartition>& out) {
  if (rem == 0) {
    Overpartition done = cur;
    // canonical order: sizes descending, overlined copy first within a size
    out.push_back(std::move(done));
    return;
  }
  if (s < 1) return;
  const MultRule rule = rule_for(spec, s);
  list_rec(spec, s - 1, rem, cur, out);  // multiplicity 0
  if (rule.forbidden) return;
  for (long k = rule.step; k * s <= rem; k += rule.step) {
    if (rule.cap >= 0 && k > rule.cap) break;
    if (rule.doubled) {
      for (int over = 1; over >= 0; --over) {
        for (long i = 0; i < k; ++i)
          cur.parts.emplace_back(s, over == 1 && i == 0);
        list_rec(spec, s - 1, rem - k * s, cur, out);
        cur.parts.resize(cur.parts.size() - k);
      }
    } else {
      for (long i = 0; i < k; ++i)
        cur.parts.emplace_back(s, rule.overlined_only);
      list_rec(spec, s - 1, rem - k * s, cur, out);
      cur.parts.resize(cur.parts.size() - k);
    }
  }
}

}  // namespace

std::vector<Overpartition> list_class(const ClassSpec& spec, long n) {
  spec.validate();
  if (n < 0) throw std::invalid_argument("list_class: negative weight");
  if (n > kMaxListWeight)
    throw EnumerationRange("list_class: listing limited to n <= 30");
  std::vector<Overpartition> out;
  Overpartition cur;
  list_rec(spec, n, n, cur, out);
  return out;
}

}  // namespace regover
