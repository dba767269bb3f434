#include "cubicbh/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "cubicbh/errors.hpp"

namespace cubicbh {

RootOfUnity::RootOfUnity(i64 num, i64 den) {
  if (den <= 0) throw DomainError("RootOfUnity: denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const i64 g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::complex<double> RootOfUnity::value() const { return unit_phase(num_, den_); }

RootOfUnity RootOfUnity::pow(i64 k) const {
  const i64 r = static_cast<i64>(
      (static_cast<i128>(num_) * static_cast<i128>(k)) % den_);
  return {r, den_};
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  const i64 den = std::lcm(a.den_, b.den_);
  return {a.num_ * (den / a.den_) + b.num_ * (den / b.den_), den};
}

std::complex<double> to_complex(const CharValue& v) {
  return v ? v->value() : std::complex<double>{0.0, 0.0};
}

std::complex<double> unit_phase(double x) {
  x -= std::floor(x);
  if (x >= 0.5) x -= 1.0;
  const double angle = 2.0 * std::numbers::pi * x;
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> unit_phase(i64 num, i64 den) {
  i64 r = num % den;
  if (r < 0) r += den;
  // Fold into [-den/2, den/2) so the angle argument stays small.
  if (2 * r >= den) r -= den;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                       static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

namespace {

std::shared_ptr<const detail::GroupData> build_group(u64 q) {
  if (q == 0) throw DomainError("character_group: modulus must be >= 1");
  if (q > kCharacterModulusBound) {
    throw CapacityError("character_group: modulus " + std::to_string(q) +
                        " exceeds dlog-table bound " +
                        std::to_string(kCharacterModulusBound));
  }
  auto g = std::make_shared<detail::GroupData>();
  g->q = q;
  const auto f = factorize(q);
  g->size = 1;
  for (const auto& [p, e] : f.factors) {
    detail::Component c;
    c.p = p;
    c.e = e;
    c.pe = 1;
    for (int i = 0; i < e; ++i) c.pe *= p;
    const std::size_t idx = g->components.size();
    if (p == 2) {
      if (e == 2) {
        c.dlog[0].assign(c.pe, 0);
        c.dlog[0][3] = 1;
        g->factors.push_back({3, 2, idx, 0});
      } else if (e >= 3) {
        const u64 half = c.pe / 4;
        c.dlog[0].assign(c.pe, 0);
        c.dlog[1].assign(c.pe, 0);
        u64 five_t = 1;
        for (u64 t = 0; t < half; ++t) {
          c.dlog[0][five_t] = 0;
          c.dlog[1][five_t] = static_cast<std::uint32_t>(t);
          const u64 neg = c.pe - five_t;
          c.dlog[0][neg] = 1;
          c.dlog[1][neg] = static_cast<std::uint32_t>(t);
          five_t = five_t * 5 % c.pe;
        }
        g->factors.push_back({c.pe - 1, 2, idx, 0});
        g->factors.push_back({5, half, idx, 1});
      }
    } else {
      const u64 gen = primitive_root_prime_power(p, e);
      const u64 order = c.pe / p * (p - 1);
      c.dlog[0].assign(c.pe, 0);
      u64 x = 1;
      for (u64 j = 0; j < order; ++j) {
        c.dlog[0][x] = static_cast<std::uint32_t>(j);
        x = x * gen % c.pe;
      }
      g->factors.push_back({gen, order, idx, 0});
    }
    g->components.push_back(std::move(c));
  }
  g->exponent = 1;
  for (const auto& cf : g->factors) {
    g->size *= cf.order;
    g->exponent = std::lcm(g->exponent, cf.order);
  }
  return g;
}

}  // namespace

DirichletCharacter::DirichletCharacter(
    std::shared_ptr<const detail::GroupData> group, std::vector<u64> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (exponents_.size() != group_->factors.size()) {
    throw DomainError("DirichletCharacter: exponent vector has wrong length");
  }
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    exponents_[i] %= group_->factors[i].order;
  }
}

CharValue DirichletCharacter::evaluate(i64 n) const {
  const auto& g = *group_;
  const u64 L = g.exponent;
  u64 acc = 0;
  std::vector<u64> residues(g.components.size());
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    const auto& comp = g.components[c];
    residues[c] = mod_floor(n, comp.pe);
    if (residues[c] % comp.p == 0) return std::nullopt;
  }
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const auto& f = g.factors[i];
    const u64 log = g.components[f.component].dlog[f.slot][residues[f.component]];
    acc = (acc + mulmod(mulmod(exponents_[i], log, L), L / f.order, L)) % L;
  }
  return RootOfUnity(static_cast<i64>(acc), static_cast<i64>(L));
}

u64 DirichletCharacter::order() const {
  u64 ord = 1;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    const u64 d = group_->factors[i].order;
    ord = std::lcm(ord, d / std::gcd(d, exponents_[i]));
  }
  return ord;
}

bool DirichletCharacter::is_principal() const {
  for (u64 t : exponents_) {
    if (t != 0) return false;
  }
  return true;
}

bool DirichletCharacter::is_primitive() const {
  const u64 q = modulus();
  // chi is induced from q/p iff it is trivial on {n = 1 (mod q/p)}.
  for (const auto& comp : group_->components) {
    const u64 step = q / comp.p;
    bool trivial = true;
    for (u64 j = 0; j < comp.p && trivial; ++j) {
      const u64 n = 1 + j * step;
      if (std::gcd(n, q) != 1) continue;
      const auto v = evaluate(static_cast<i64>(n));
      if (!v || !v->is_one()) trivial = false;
    }
    if (trivial) return false;
  }
  return true;
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<u64> t(exponents_.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const u64 d = group_->factors[i].order;
    t[i] = (d - exponents_[i]) % d;
  }
  return {group_, std::move(t)};
}

DirichletCharacter DirichletCharacter::pow(u64 k) const {
  std::vector<u64> t(exponents_.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = mulmod(exponents_[i], k, group_->factors[i].order);
  }
  return {group_, std::move(t)};
}

CharacterGroup::CharacterGroup(u64 q) : data_(build_group(q)) {}

std::vector<std::pair<u64, u64>> CharacterGroup::cyclic_factors() const {
  std::vector<std::pair<u64, u64>> out;
  for (const auto& f : data_->factors) out.emplace_back(f.generator, f.order);
  return out;
}

DirichletCharacter CharacterGroup::character(u64 index) const {
  if (index >= size()) throw DomainError("character index out of range");
  std::vector<u64> t(data_->factors.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = index % data_->factors[i].order;
    index /= data_->factors[i].order;
  }
  return {data_, std::move(t)};
}

std::vector<DirichletCharacter> CharacterGroup::characters() const {
  std::vector<DirichletCharacter> out;
  out.reserve(size());
  for (u64 i = 0; i < size(); ++i) out.push_back(character(i));
  return out;
}

DirichletCharacter CharacterGroup::principal() const {
  return {data_, std::vector<u64>(data_->factors.size(), 0)};
}

DirichletCharacter CharacterGroup::from_exponents(
    std::vector<u64> exponents) const {
  return {data_, std::move(exponents)};
}

std::complex<double> gauss_sum(const DirichletCharacter& chi) {
  const i64 q = static_cast<i64>(chi.modulus());
  std::complex<double> tau{0.0, 0.0};
  for (i64 r = 0; r < q; ++r) {
    const auto v = chi.evaluate(r);
    if (!v) continue;
    // chi(r) e(r/q) as one exact phase.
    tau += unit_phase(v->num() * q + r * v->den(), v->den() * q);
  }
  return tau;
}

std::array<DirichletCharacter, 2> cubic_characters(u64 p) {
  if (!is_prime(p) || p % 3 != 1) {
    throw DomainError("cubic_characters: " + std::to_string(p) +
                      " is not a prime = 1 (mod 3)");
  }
  const CharacterGroup group(p);
  const u64 third = (p - 1) / 3;
  return {group.from_exponents({third}), group.from_exponents({2 * third})};
}

int np_via_characters(i64 k, u64 p) {
  if (!is_prime(p)) {
    throw DomainError("np_via_characters: " + std::to_string(p) +
                      " is not prime");
  }
  if (p % 3 != 1) return 1;
  const auto chis = cubic_characters(p);
  const i64 minus_k = -static_cast<i64>(mod_floor(k, p));
  const std::complex<double> total =
      1.0 + chis[0](minus_k) + chis[1](minus_k);
  return static_cast<int>(std::lround(total.real()));
}

PolyaVinogradovResult polya_vinogradov_check(const DirichletCharacter& chi) {
  if (chi.is_principal()) {
    throw DomainError("polya_vinogradov_check: character must be non-principal");
  }
  const u64 q = chi.modulus();
  // Prefix sums P(j) = sum_{n <= j} chi(n). A non-principal character sums to
  // zero over a period, so P is q-periodic and every window (M, M+N] with
  // M+N <= 2q has the value P(j) - P(i) for some i, j in [0, q).
  std::vector<double> re(q), im(q);
  std::complex<double> run{0.0, 0.0};
  for (u64 j = 0; j < q; ++j) {
    re[j] = run.real();
    im[j] = run.imag();
    run += chi(static_cast<i64>(j + 1));
  }
  double best = 0.0;
  for (u64 i = 0; i < q; ++i) {
    for (u64 j = i + 1; j < q; ++j) {
      const double dr = re[j] - re[i];
      const double di = im[j] - im[i];
      best = std::max(best, dr * dr + di * di);
    }
  }
  PolyaVinogradovResult r;
  r.max_window_sum = std::sqrt(best);
  const double qd = static_cast<double>(q);
  r.bound = 6.0 * std::sqrt(qd) * std::log(qd);
  r.pass = r.max_window_sum <= r.bound;
  return r;
}

}  // namespace cubicbh
