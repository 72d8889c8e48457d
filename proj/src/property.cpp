#include "desargues/property.hpp"

#include "desargues/error.hpp"

namespace desargues {

namespace {

constexpr int kRetries = 50;

Outcome evaluate(const Property& p, Draw& draw) {
  try {
    return p.body(draw);
  } catch (const Discard&) {
    return {Outcome::Status::Discard, {}};
  } catch (const Error& e) {
    return Outcome::fail(std::string("unexpected error: ") + e.what());
  }
}

std::string describe(const std::vector<Rat>& log, const std::string& detail) {
  std::string out = "inputs [";
  for (std::size_t i = 0; i < log.size(); ++i) out += (i ? ", " : "") + log[i].str();
  return out + "]: " + detail;
}

std::vector<Rat> halvings(const Rat& v) {
  std::vector<Rat> out;
  if (v.is_zero()) return out;
  out.emplace_back(0);
  const mpz_class n = v.num(), d = v.den();
  const mpz_class hn = n / 2, hd = d / 2;
  out.emplace_back(Rat(hn, d));
  if (hd != 0) out.emplace_back(Rat(n, hd));
  return out;
}

}  // namespace

Rat Draw::next(const std::function<Rat()>& fresh) {
  if (rng_ != nullptr) {
    log_.push_back(fresh());
    return log_.back();
  }
  if (pos_ >= log_.size()) throw Discard{};
  return log_[pos_++];
}

long long Draw::integer(long long lo, long long hi) {
  const Rat v = next([&] {
    return Rat(lo + static_cast<long long>((*rng_)() % static_cast<std::uint64_t>(hi - lo + 1)));
  });
  if (!v.is_integer()) throw Discard{};
  return v.num().get_si();
}

Rat Draw::rat(long long height) {
  return next([&] {
    const auto h = static_cast<std::uint64_t>(height);
    const long long num = static_cast<long long>((*rng_)() % (2 * h + 1)) - height;
    const long long den = static_cast<long long>((*rng_)() % h) + 1;
    return Rat(num, den);
  });
}

Rat Draw::nonzero(long long height) {
  const Rat v = rat(height);
  if (v.is_zero()) throw Discard{};
  return v;
}

PPoint Draw::point(long long height) {
  const Rat x = rat(height), y = rat(height);
  const bool infinite = integer(0, 3) == 0;
  const Rat z = infinite ? Rat(0) : rat(height);
  const Vec3 v{x, y, z};
  if (is_zero(v)) throw Discard{};
  return PPoint(v);
}

PPoint Draw::affine_point(long long height) {
  const Rat x = rat(height);
  return PPoint::affine(x, rat(height));
}

PLine Draw::line(long long height) {
  const Rat u = rat(height), v = rat(height), w = rat(height);
  const Vec3 c{u, v, w};
  if (is_zero(c)) throw Discard{};
  return PLine(c);
}

Homography Draw::homography(long long height) {
  Mat3 m;
  for (auto& row : m)
    for (auto& x : row) x = Rat(integer(-height, height));
  if (determinant(m).is_zero()) throw Discard{};
  return Homography(m);
}

std::pair<Conic, PPoint> Draw::conic_with_point(long long height) {
  const Homography h = homography(height);
  return {transform(Conic::unit_circle(), h), h.apply(PPoint(-1, 0, 1))};
}

PPoint Draw::on_conic(const RationalParametrization& param, long long height) {
  return param.point(ExtRat(rat(height)));
}

std::mt19937_64 case_rng(std::uint64_t seed, int case_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(case_index)};
  return std::mt19937_64(seq);
}

std::pair<std::vector<Rat>, std::string> shrink(const Property& p, std::vector<Rat> log,
                                                std::string detail) {
  for (int round = 0; round < 200; ++round) {
    bool improved = false;
    for (std::size_t i = 0; i < log.size() && !improved; ++i) {
      for (const Rat& smaller : halvings(log[i])) {
        auto candidate = log;
        candidate[i] = smaller;
        Draw replay(candidate);
        const Outcome o = evaluate(p, replay);
        if (o.status == Outcome::Status::Fail) {
          log = std::move(candidate);
          detail = o.detail;
          improved = true;
          break;
        }
      }
    }
    if (!improved) break;
  }
  return {std::move(log), std::move(detail)};
}

PropertyResult run_property(const Property& p, std::uint64_t seed, int cases) {
  PropertyResult r;
  r.name = p.name;
  for (int i = 0; i < cases; ++i) {
    auto rng = case_rng(seed, i);
    Outcome o{Outcome::Status::Discard, {}};
    std::vector<Rat> log;
    for (int attempt = 0; attempt < kRetries && o.status == Outcome::Status::Discard;
         ++attempt) {
      Draw draw(rng);
      o = evaluate(p, draw);
      log = draw.log();
    }
    switch (o.status) {
      case Outcome::Status::Pass: ++r.passed; break;
      case Outcome::Status::Discard: ++r.discarded; break;
      case Outcome::Status::Fail:
        ++r.failed;
        if (!r.counterexample) {
          auto [small, why] = shrink(p, log, o.detail);
          r.counterexample = "case " + std::to_string(i) + ", " + describe(small, why);
        }
        break;
    }
  }
  return r;
}

}  // namespace desargues
