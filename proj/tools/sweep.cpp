#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "dmimo/errors.hpp"
#include "json.hpp"

namespace dmimo::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

// Closed-form bounds of these schemes carry 1/(1-alpha^2).
bool needs_regular_channel(Scheme s) {
  return s == Scheme::QW || s == Scheme::EC || s == Scheme::DC;
}

auto row_key(const SweepRow& r) {
  return std::make_tuple(r.alpha2, r.p_db, r.c, r.cprime, static_cast<int>(r.scheme));
}

struct Task {
  double alpha2, p_db, c, cprime;
  Scheme scheme;
};

std::vector<SweepRow> evaluate_tasks(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<SweepRow> rows(tasks.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      try {
        const auto spec = ChannelSpec::from_alpha2(t.alpha2);
        const LinkBudget budget{db_to_linear(t.p_db), t.c, t.cprime};
        const SchemeRate r = evaluate(t.scheme, spec, budget);
        rows[i] = {t.alpha2, t.p_db, t.c, t.cprime, t.scheme,
                   r.rate, r.printed_bound, r.bound_tight, r.fixed_point};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

ordered_json number_or_inf(double x) {
  if (std::isinf(x)) return "inf";
  return x;
}

double number_from_json(const ordered_json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
    throw ValidationError("unexpected string in numeric JSON field");
  }
  return j.get<double>();
}

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double parse_value(std::string_view text, bool allow_inf) {
  const std::string_view t = trim(text);
  if (t.empty()) throw ValidationError("empty numeric value");
  if (iequals(t, "inf") || iequals(t, "+inf") || iequals(t, "infinity")) {
    if (!allow_inf) throw ValidationError("'inf' is only allowed for C and C'");
    return std::numeric_limits<double>::infinity();
  }
  double value = 0.0;
  const char* first = t.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(value)) {
    throw ValidationError("not a number: '" + std::string(t) + "'");
  }
  return value;
}

std::vector<double> parse_axis(std::string_view text, bool allow_inf) {
  const std::string_view t = trim(text);
  if (t.find(':') != std::string_view::npos) {
    const auto parts = split(t, ':');
    if (parts.size() != 3) throw ValidationError("range must be start:step:stop");
    const double start = parse_value(parts[0], false);
    const double step = parse_value(parts[1], false);
    const double stop = parse_value(parts[2], false);
    if (!(step > 0.0)) throw ValidationError("range step must be positive");
    if (stop < start) throw ValidationError("range stop must not precede start");
    const double span = (stop - start) / step;
    if (span > 1e6) throw ValidationError("range has more than 10^6 points");
    const auto count = static_cast<long>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
  std::vector<double> out;
  for (auto part : split(t, ',')) out.push_back(parse_value(part, allow_inf));
  return out;
}

std::vector<Scheme> parse_scheme_list(std::string_view text, bool* is_all) {
  if (is_all) *is_all = false;
  const std::string_view t = trim(text);
  if (iequals(t, "all")) {
    if (is_all) *is_all = true;
    return {kAllSchemes.begin(), kAllSchemes.end()};
  }
  std::vector<Scheme> out;
  if (t.empty()) return out;
  for (auto part : split(t, ',')) {
    const auto s = parse_scheme(trim(part));
    if (!s) throw ValidationError("unknown scheme '" + std::string(trim(part)) + "'");
    out.push_back(*s);
  }
  return out;
}

void normalize(SweepGrid& grid) {
  auto sort_unique = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  if (grid.alpha2_values.empty()) throw ValidationError("alpha2 axis is empty");
  if (grid.p_db_values.empty()) throw ValidationError("snr-db axis is empty");
  if (grid.c_values.empty()) throw ValidationError("C axis is empty");
  if (grid.cprime_values.empty()) throw ValidationError("C' axis is empty");
  if (grid.schemes.empty()) throw ValidationError("scheme set is empty");
  for (double a2 : grid.alpha2_values) {
    if (!(a2 >= 0.0 && a2 <= 1.0)) throw ValidationError("alpha2 must lie in [0,1]");
  }
  for (double p : grid.p_db_values) {
    if (!std::isfinite(p)) throw ValidationError("snr-db must be finite");
  }
  for (double c : grid.c_values) {
    if (!(c >= 0.0)) throw ValidationError("C must be nonnegative");
  }
  for (double c : grid.cprime_values) {
    if (!(c >= 0.0)) throw ValidationError("C' must be nonnegative");
  }
  sort_unique(grid.alpha2_values);
  sort_unique(grid.p_db_values);
  sort_unique(grid.c_values);
  sort_unique(grid.cprime_values);
  sort_unique(grid.schemes);

  if (grid.skip_inapplicable) return;
  for (Scheme s : grid.schemes) {
    if (needs_regular_channel(s) && grid.alpha2_values.back() >= 1.0) {
      throw ValidationError("scheme " + std::string(scheme_name(s)) +
                            " needs alpha2 < 1: its closed form contains 1/(1-alpha^2)");
    }
    for (double c : grid.c_values) {
      for (double cp : grid.cprime_values) {
        if (!is_applicable(s, LinkBudget{0.0, c, cp})) {
          throw ValidationError(
              "scheme " + std::string(scheme_name(s)) +
              ((s == Scheme::IM || s == Scheme::QW) ? " requires --cprime inf"
                                                    : " requires --c inf"));
        }
      }
    }
  }
}

std::vector<SweepRow> run_sweep(const SweepGrid& input, unsigned threads) {
  SweepGrid grid = input;
  normalize(grid);
  std::vector<Task> tasks;
  for (double a2 : grid.alpha2_values) {
    for (double p : grid.p_db_values) {
      for (double c : grid.c_values) {
        for (double cp : grid.cprime_values) {
          for (Scheme s : grid.schemes) {
            if (!is_applicable(s, LinkBudget{0.0, c, cp})) continue;
            if (a2 >= 1.0 && needs_regular_channel(s)) continue;
            tasks.push_back({a2, p, c, cp, s});
          }
        }
      }
    }
  }
  return evaluate_tasks(tasks, threads);
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_csv(std::ostream& os, std::span<const SweepRow> rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << format_number(r.alpha2) << ',' << format_number(r.p_db) << ',' << format_number(r.c)
       << ',' << format_number(r.cprime) << ',' << scheme_name(r.scheme) << ','
       << format_number(r.rate) << ','
       << (r.printed_bound ? format_number(*r.printed_bound) : "") << ','
       << (r.bound_tight ? (*r.bound_tight ? "true" : "false") : "") << ','
       << (r.fixed_point ? format_number(*r.fixed_point) : "") << '\n';
  }
  if (!os) throw OutputError("failed writing CSV output");
}

void write_json(std::ostream& os, std::span<const SweepRow> rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["alpha2"] = r.alpha2;
    j["p_db"] = r.p_db;
    j["c"] = number_or_inf(r.c);
    j["cprime"] = number_or_inf(r.cprime);
    j["scheme"] = std::string(scheme_name(r.scheme));
    j["rate"] = r.rate;
    j["printed_bound"] = r.printed_bound ? ordered_json(*r.printed_bound) : ordered_json(nullptr);
    j["bound_tight"] = r.bound_tight ? ordered_json(*r.bound_tight) : ordered_json(nullptr);
    j["fixed_point"] =
        r.fixed_point ? number_or_inf(*r.fixed_point) : ordered_json(nullptr);
    arr.push_back(std::move(j));
  }
  os << arr.dump(2) << '\n';
  if (!os) throw OutputError("failed writing JSON output");
}

std::vector<SweepRow> read_json(std::istream& is) {
  ordered_json arr;
  try {
    arr = ordered_json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  std::vector<SweepRow> rows;
  for (const auto& j : arr) {
    SweepRow r;
    r.alpha2 = j.at("alpha2").get<double>();
    r.p_db = j.at("p_db").get<double>();
    r.c = number_from_json(j.at("c"));
    r.cprime = number_from_json(j.at("cprime"));
    const auto s = parse_scheme(j.at("scheme").get<std::string>());
    if (!s) throw ValidationError("unknown scheme in JSON");
    r.scheme = *s;
    r.rate = j.at("rate").get<double>();
    if (!j.at("printed_bound").is_null()) r.printed_bound = j.at("printed_bound").get<double>();
    if (!j.at("bound_tight").is_null()) r.bound_tight = j.at("bound_tight").get<bool>();
    if (!j.at("fixed_point").is_null()) r.fixed_point = number_from_json(j.at("fixed_point"));
    rows.push_back(r);
  }
  return rows;
}

std::vector<SweepRow> figure2_rows(unsigned threads) {
  const double inf = kUnlimited;
  const double a2 = 0.6;
  std::vector<Task> tasks;
  for (int db = 0; db <= 40; ++db) {
    const double p = db;
    tasks.push_back({a2, p, 4.0, inf, Scheme::IM});
    tasks.push_back({a2, p, 4.0, inf, Scheme::QW});
    tasks.push_back({a2, p, inf, 4.0, Scheme::EC});
    tasks.push_back({a2, p, inf, 4.0, Scheme::DC});
    for (Scheme s : {Scheme::UB, Scheme::IM_EC, Scheme::IM_DC, Scheme::QW_EC, Scheme::QW_DC}) {
      tasks.push_back({a2, p, 4.0, 4.0, s});
    }
  }
  auto rows = evaluate_tasks(tasks, threads);
  std::sort(rows.begin(), rows.end(),
            [](const SweepRow& x, const SweepRow& y) { return row_key(x) < row_key(y); });
  return rows;
}

std::string figure2_readme() {
  return R"(# Rate versus SNR dataset

`figure2.csv` holds achievable rates in bit/(symbol x antenna) for the
circulant interference channel with alpha^2 = 0.6, SNR P swept from 0 to
40 dB in 1 dB steps (41 points per curve).

| curves | C | C' |
|---|---|---|
| IM, QW | 4 | inf |
| EC, DC | inf | 4 |
| UB, IM-EC, IM-DC, QW-EC, QW-DC | 4 | 4 |

Nine curves, 369 rows. Columns follow the `dmimo sweep` CSV layout.

## Reading of the link assignment

The reference figure assigns IM and QW to unlimited receive-side links with
C = 4, and EC and DC to unlimited transmit-side links with C' = 4. That matches
how the schemes are defined: IM and QW act on the transmit-side links, EC and
DC on the receive side. The discussion accompanying the figure swaps which
side is unlimited for the two curve families. This dataset follows the
figure's own assignment.

## Notes

* UB is the same curve for all three link configurations, since
  min{C, C', R_WF(P)} only depends on min{C, C'} = 4.
* The `bound_tight` column is the regime predicate printed next to each
  closed-form bound, evaluated verbatim. For EC at C' = 4 the C' condition
  fails (log2((1+alpha^2)/(1-alpha)^2) ~ 4.98 > 4), so the column reads false.
* DC dips marginally below EC at the lowest SNR (about 0.003 bit at 0 dB);
  from a few dB upward DC is the better receive-side scheme.
)";
}

}  // namespace dmimo::cli
