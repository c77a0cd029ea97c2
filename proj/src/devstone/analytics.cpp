#include "devstone/analytics.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace devstone {

namespace {

using u128 = unsigned __int128;

u128 checked_add(u128 a, u128 b) {
  u128 r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw CountOverflow("count addition overflows 128-bit intermediate");
  }
  return r;
}

u128 checked_mul(u128 a, u128 b) {
  u128 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw CountOverflow("count multiplication overflows 128-bit intermediate");
  }
  return r;
}

std::uint64_t narrow(u128 v, const char* what) {
  if (v > static_cast<u128>(std::numeric_limits<std::uint64_t>::max())) {
    throw CountOverflow(std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

// n-th triangular number, 0 for n <= 0.
u128 tri(std::int64_t n) {
  if (n <= 0) return 0;
  u128 un = static_cast<u128>(n);
  return checked_mul(un, un + 1) / 2;
}

u128 pow_checked(u128 base, int exp) {
  u128 r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

struct SingleEventCounts {
  u128 atomics = 0;
  u128 transitions = 0;  // internal == external for every family
  u128 events = 0;
};

u128 li_transitions(int w, int d) {
  return checked_add(checked_mul(static_cast<u128>(w - 1), static_cast<u128>(d - 1)), 1);
}

u128 hi_transitions(int w, int d) {
  // (w-1 direct deliveries + chain traffic) per regular level, plus the
  // deepest atomic.
  u128 per_level = checked_add(static_cast<u128>(w - 1), tri(w - 2));
  return checked_add(checked_mul(per_level, static_cast<u128>(d - 1)), 1);
}

u128 homod_atomics(int w, int d) {
  u128 per_level = checked_add(static_cast<u128>(w - 1), tri(w - 1));
  return checked_add(checked_mul(per_level, static_cast<u128>(d - 1)), 1);
}

// Every workload atomic runs one internal and one external transition per
// bag it receives, so the transition total is the number of delivered bags:
// per regular level, the w-1 row-1 atomics get an in2 bag and a row-2 bag
// per wave, the deeper rows' head atomics get one in2 bag per wave (their
// tails receive nothing), element-wise chain hops add one bag per wave for
// rows 3..w, and level l sees 1 + (w-1)(l-1) waves. Summing over levels:
u128 homod_transitions(int w, int d) {
  u128 w1 = static_cast<u128>(w - 1);
  u128 d1 = static_cast<u128>(d - 1);
  u128 waves = checked_add(d1, checked_mul(w1, tri(d - 2)));
  u128 a = checked_mul(checked_mul(2, w1), waves);
  u128 b = checked_mul(d1, checked_add(tri(w - 2), checked_mul(w1, w1)));
  return checked_add(checked_add(a, b), 1);
}

// Event (received payload) total for HOmod, by the level-by-level wave
// recursion: level l receives K_l distinct wave instants; P_l[j] is the
// payload volume arriving with wave j; each wave re-excites the row
// structure whose fan-out multiplies volumes by (w-1) per hop.
u128 homod_events(int w, int d) {
  std::vector<u128> W(static_cast<std::size_t>(w) + 1, 0);
  for (int i = 1; i <= w; ++i) W[static_cast<std::size_t>(i)] = static_cast<u128>(w - i);

  // P is indexed 1..K; entries outside are zero.
  std::size_t K = 1;
  std::vector<u128> P{0, 1};  // P[1] = 1

  // A table this large implies a count far beyond 64 bits (volumes multiply
  // by at least (w-1)^2 >= 4 per level whenever the table can grow), so
  // refuse early instead of exhausting memory.
  constexpr std::size_t table_limit = std::size_t{1} << 26;

  u128 total = 0;
  for (int l = 1; l <= d - 1; ++l) {
    if (l > 1) {
      std::size_t Knew = K + static_cast<std::size_t>(w - 1);
      if (Knew > table_limit) {
        throw CountOverflow("event recursion table exceeds safe bounds");
      }
      std::vector<u128> Pnew(Knew + 1, 0);
      for (std::size_t j = 1; j <= Knew; ++j) {
        u128 s = 0;
        for (int i = 1; i <= w; ++i) {
          std::int64_t idx = static_cast<std::int64_t>(j) - i + 1;
          if (idx >= 1 && idx <= static_cast<std::int64_t>(K)) {
            s = checked_add(s, P[static_cast<std::size_t>(idx)]);
          }
        }
        Pnew[j] = checked_mul(static_cast<u128>(w - 1), s);
      }
      K = Knew;
      P = std::move(Pnew);
    }
    for (std::size_t c = 1; c <= K + static_cast<std::size_t>(w) - 1; ++c) {
      u128 s1 = 0;
      u128 s2 = 0;
      for (int i = 1; i <= w; ++i) {
        std::int64_t idx = static_cast<std::int64_t>(c) - i + 1;
        if (idx >= 1 && idx <= static_cast<std::int64_t>(K)) {
          u128 p = P[static_cast<std::size_t>(idx)];
          s1 = checked_add(s1, p);
          s2 = checked_add(s2, checked_mul(W[static_cast<std::size_t>(i)], p));
        }
      }
      total = checked_add(total, checked_add(checked_mul(W[1], s1), s2));
    }
  }
  return checked_add(total, 1);
}

u128 homem_transitions(int w, int d) {
  return checked_add(
      checked_mul(checked_mul(2, static_cast<u128>(w - 1)), static_cast<u128>(d - 1)), 1);
}

u128 homem_events(int w, int d) {
  u128 total = 0;
  u128 w1 = static_cast<u128>(w - 1);
  for (int l = 1; l <= d - 1; ++l) {
    u128 odd = pow_checked(w1, 2 * l - 1);          // second set volume
    u128 even = checked_mul(odd, w1);               // first set volume
    total = checked_add(total, checked_add(even, odd));
  }
  return checked_add(total, 1);
}

SingleEventCounts single_event_counts(const BenchmarkSpec& spec) {
  const int w = spec.width;
  const int d = spec.depth;
  SingleEventCounts c;
  switch (spec.family) {
    case Family::LI:
      c.atomics = li_transitions(w, d);
      c.transitions = c.atomics;
      c.events = c.atomics;
      break;
    case Family::HI:
    case Family::HO:
      c.atomics = li_transitions(w, d);
      c.transitions = hi_transitions(w, d);
      c.events = c.transitions;
      break;
    case Family::HOmod:
      c.atomics = homod_atomics(w, d);
      c.transitions = homod_transitions(w, d);
      c.events = homod_events(w, d);
      break;
    case Family::HOmem:
      c.atomics = homem_transitions(w, d);
      c.transitions = c.atomics;
      c.events = homem_events(w, d);
      break;
  }
  return c;
}

}  // namespace

AnalyticPrediction predict(const BenchmarkSpec& spec) {
  validate_spec(spec);
  SingleEventCounts c = single_event_counts(spec);
  u128 n = static_cast<u128>(spec.n_events);
  AnalyticPrediction p;
  p.n_atomics = narrow(c.atomics, "atomic count");
  p.n_delta_int = narrow(checked_mul(c.transitions, n), "internal transition count");
  p.n_delta_ext = p.n_delta_int;
  p.n_events = narrow(checked_mul(c.events, n), "event count");
  return p;
}

std::uint64_t li_transition_count(int width, int depth) {
  return narrow(li_transitions(width, depth), "count");
}

std::uint64_t hi_transition_count_summed(int width, int depth) {
  // Literal per-level sum: each regular level contributes one transition
  // per atomic position along the chain.
  u128 per_level = 0;
  for (int i = 1; i <= width - 1; ++i) {
    per_level = checked_add(per_level, static_cast<u128>(i));
  }
  return narrow(
      checked_add(checked_mul(per_level, static_cast<u128>(depth - 1)), 1), "count");
}

std::uint64_t hi_transition_count_closed(int width, int depth) {
  u128 w = static_cast<u128>(width);
  u128 chain = checked_mul(w, w - 1) / 2;
  return narrow(checked_add(checked_mul(chain, static_cast<u128>(depth - 1)), 1),
                "count");
}

std::uint64_t homod_atomic_count(int width, int depth) {
  return narrow(homod_atomics(width, depth), "count");
}

std::uint64_t homod_transition_count(int width, int depth) {
  return narrow(homod_transitions(width, depth), "count");
}

std::uint64_t homod_event_count(int width, int depth) {
  return narrow(homod_events(width, depth), "count");
}

std::uint64_t homem_transition_count(int width, int depth) {
  return narrow(homem_transitions(width, depth), "count");
}

std::uint64_t homem_event_count(int width, int depth) {
  return narrow(homem_events(width, depth), "count");
}

}  // namespace devstone
