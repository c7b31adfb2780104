// Copyright 2026 The nilrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nilrad/app.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>

#include "nilrad/centralizer.hpp"
#include "nilrad/elementary.hpp"
#include "nilrad/jordan.hpp"
#include "nilrad/parallel.hpp"
#include "nilrad/quiver.hpp"

namespace nilrad
{

std::string_view to_string(Verb verb)
{
  switch (verb) {
    case Verb::Quiver: return "quiver";
    case Verb::Richardson: return "richardson";
    case Verb::Partition: return "partition";
    case Verb::Centralizer: return "centralizer";
    case Verb::Esub: return "esub";
    case Verb::Srk: return "srk";
    case Verb::Verify: return "verify";
  }
  return "?";
}

Verb parse_verb(std::string_view text)
{
  for (Verb v : {Verb::Quiver, Verb::Richardson, Verb::Partition, Verb::Centralizer, Verb::Esub,
      Verb::Srk, Verb::Verify})
  {
    if (to_string(v) == text) {
      return v;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + std::string(text) + "'");
}

UsageError::UsageError(std::string flag, const std::string & message)
: Error(ErrorCode::InvalidArgument, "--" + flag + ": " + message), flag_(std::move(flag))
{
}

namespace
{

unsigned parse_unsigned(const std::string & flag, std::string_view text)
{
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(flag, "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> subspace_strings(
  const Subspace & s, const DimensionVector & d, const PrimeField & field)
{
  const Nilradical nil(d);
  std::vector<std::string> out;
  for (const Vec & v : s.basis()) {
    out.push_back(NilElement::from_coords(nil, v, field).to_string());
  }
  return out;
}

}  // namespace

Command::Command(Verb verb)
: verb_(verb), jobs_(default_jobs())
{
}

void Command::set(std::string_view flag_in, std::string_view value)
{
  while (!flag_in.empty() && flag_in.front() == '-') {
    flag_in.remove_prefix(1);
  }
  const std::string flag(flag_in);
  raw_[flag] = std::string(value);
  if (flag == "d") {
    try {
      d_ = DimensionVector::parse(value);
    } catch (const Error & e) {
      throw UsageError(flag, e.what());
    }
  } else if (flag == "p") {
    const unsigned p = parse_unsigned(flag, value);
    if (!is_prime(p)) {
      throw UsageError(flag, std::to_string(p) + " is not prime");
    }
    p_ = p;
  } else if (flag == "n") {
    const auto dots = value.find("..");
    unsigned lo = 0;
    unsigned hi = 0;
    if (dots == std::string_view::npos) {
      lo = hi = parse_unsigned(flag, value);
    } else {
      lo = parse_unsigned(flag, value.substr(0, dots));
      hi = parse_unsigned(flag, value.substr(dots + 2));
    }
    if (lo < 1 || hi < lo || hi > 30) {
      throw UsageError(flag, "expected n or lo..hi with 1 <= lo <= hi <= 30");
    }
    n_ = {lo, hi};
  } else if (flag == "tables") {
    tables_.clear();
    std::string_view rest = value;
    while (true) {
      const auto comma = rest.find(',');
      const unsigned t = parse_unsigned(flag, rest.substr(0, comma));
      if (t != 1 && t != 2) {
        throw UsageError(flag, "known tables are 1 (centralizers) and 2 (elementary subalgebras)");
      }
      tables_.push_back(t);
      if (comma == std::string_view::npos) {
        break;
      }
      rest = rest.substr(comma + 1);
    }
  } else if (flag == "format") {
    if (value == "json") {
      format_ = Format::Json;
    } else if (value == "text") {
      format_ = Format::Text;
    } else if (value == "dot") {
      if (verb_ != Verb::Quiver) {
        throw UsageError(flag, "dot output is only available for quiver");
      }
      format_ = Format::Dot;
    } else {
      throw UsageError(flag, "expected json, text or dot, got '" + std::string(value) + "'");
    }
  } else if (flag == "cap") {
    cap_ = parse_unsigned(flag, value);
  } else if (flag == "jobs") {
    jobs_ = std::max(1U, parse_unsigned(flag, value));
  } else if (flag == "out") {
    out_ = std::string(value);
  } else if (flag == "batch") {
    if (verb_ == Verb::Verify) {
      throw UsageError(flag, "verify does not take a batch file");
    }
    batch_ = std::string(value);
  } else {
    raw_.erase(flag);
    throw UsageError(flag, "unknown flag");
  }
}

Json Command::inputs() const
{
  return raw_;
}

PrimeField Command::field_for(unsigned n) const
{
  return PrimeField(p_ ? *p_ : next_prime(n + 1));
}

CheckList Command::checks_for(const DimensionVector & d, std::string & text, std::string & dot) const
{
  const PrimeField field = field_for(d.n());
  const std::string ds = d.to_string();
  CheckList checks;
  std::ostringstream t;
  switch (verb_) {
    case Verb::Quiver: {
        const Quiver q = build_quiver(d);
        dot += dot_export(q);
        const IsoReport iso = verify_phi_isomorphism(d, field);
        checks.push_back(Check::info(ds + "/arrows", q.arrows.size()));
        checks.push_back(Check::info(ds + "/paths", iso.path_count));
        checks.push_back(Check::compare(ds + "/surjective", true, iso.surjective));
        checks.push_back(Check::compare(ds + "/quotient_dim", iso.position_count, iso.path_count - iso.kernel_dim));
        checks.push_back(Check::compare(ds + "/relation_rank", iso.kernel_dim, iso.relation_rank));
        checks.push_back(Check::compare(ds + "/brackets", true, iso.brackets_compatible));
        t << "Q(" << ds << "): " << q.vertex_count << " vertices, " << q.arrows.size() << " arrows, "
          << iso.path_count << " paths\n";
        for (const auto & [a, b] : q.arrows) {
          t << "  " << a << " -> " << b << '\n';
        }
        t << "quotient dim " << iso.path_count - iso.kernel_dim << " (nilradical " << iso.position_count
          << "), relations " << iso.relation_rank << ", isomorphism " << (iso.passed() ? "ok" : "FAILED") << '\n';
        break;
      }
    case Verb::Richardson: {
        const NilElement x = richardson(d, field);
        std::vector<std::string> rows;
        for (const NilElement & part : row_decomposition(x, d)) {
          rows.push_back(part.to_string());
        }
        const LineDiagram diagram(d);
        checks.push_back(Check::info(ds + "/x", x.to_string()));
        checks.push_back(Check::info(ds + "/rows", rows));
        checks.push_back(Check::info(ds + "/coords", diagram.coords_string()));
        t << "x(" << ds << ") = " << x.to_string() << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) {
          t << "  x_" << i + 1 << " = " << rows[i] << '\n';
        }
        t << "  coords " << diagram.coords_string() << '\n';
        break;
      }
    case Verb::Partition: {
        const Partition part = partition_of(d);
        const Partition dual = conjugate(Partition(d.parts()));
        checks.push_back(Check::info(ds + "/partition", part.to_string()));
        checks.push_back(Check::compare(ds + "/conjugate_of_d", dual.to_string(), part.to_string()));
        t << part.to_string() << '\n';
        break;
      }
    case Verb::Centralizer: {
        const CentralizerBasis c = centralizer_in_u(d, field);
        const CenterBasis z = center_of(c, field);
        const auto basis = subspace_strings(c.basis, d, field);
        checks.push_back(Check::info(ds + "/dim", c.dim()));
        checks.push_back(Check::info(ds + "/abelian", c.abelian));
        checks.push_back(Check::info(ds + "/center_dim", z.dim()));
        checks.push_back(Check::info(ds + "/basis", basis));
        t << "c_u(x(" << ds << ")) over F_" << field.modulus() << ": dim " << c.dim() << ", "
          << (c.abelian ? "abelian" : "not abelian") << ", center dim " << z.dim() << '\n';
        for (const auto & b : basis) {
          t << "  " << b << '\n';
        }
        break;
      }
    case Verb::Esub: {
        const ElementaryLandscape land = maximal_elementary_containing(d, field, {cap_, jobs_});
        std::vector<std::size_t> dims;
        Json members = Json::array();
        for (const Subspace & w : land.maximal) {
          dims.push_back(w.dim());
          members.push_back(subspace_strings(w, d, field));
        }
        checks.push_back(Check::info(ds + "/count", land.maximal.size()));
        checks.push_back(Check::info(ds + "/dims", dims));
        checks.push_back(Check::info(ds + "/quotient_dim", land.quotient_dim));
        checks.push_back(Check::info(ds + "/subalgebras", members));
        t << land.maximal.size() << " maximal elementary subalgebras containing x(" << ds << ") over F_"
          << field.modulus() << '\n';
        std::map<std::size_t, std::size_t> by_dim;
        for (std::size_t dim : dims) {
          ++by_dim[dim];
        }
        for (const auto & [dim, count] : by_dim) {
          t << "  dim " << dim << ": " << count << '\n';
        }
        break;
      }
    case Verb::Srk: {
        const BoundsReport b = rank_bounds(d, field, {cap_, jobs_});
        checks.push_back(Check::info(ds + "/saturation_rank", b.saturation_rank));
        checks.push_back(Check::compare(ds + "/rank_bounds", true, b.passed));
        t << "srk(u) for (" << ds << ") over F_" << field.modulus() << " = " << b.saturation_rank
          << "  (centralizer " << b.centralizer_dim << ", center " << b.center_dim << ")\n";
        break;
      }
    case Verb::Verify:
      break;
  }
  text += t.str();
  return checks;
}

CheckList Command::verify_checks() const
{
  if (!n_) {
    throw UsageError("n", "verify needs --n");
  }
  CheckList checks;
  for (unsigned n = n_->first; n <= n_->second; ++n) {
    const PrimeField field = field_for(n);
    for (unsigned table : tables_) {
      const std::string name = std::string(table == 1 ? "centralizer" : "elementary") +
        "/n=" + std::to_string(n);
      try {
        CheckList part = table == 1 ?
          verify_centralizer_table(n, field, jobs_) :
          verify_elementary_table(n, field, {cap_, jobs_});
        checks.insert(checks.end(), part.begin(), part.end());
      } catch (const Error & e) {
        checks.push_back(Check::failed(name, nullptr, std::string(to_string(e.code())) + ": " + e.what()));
      }
    }
  }
  return checks;
}

RunResult Command::finish(Report report, std::string text, std::string dot) const
{
  RunResult result;
  result.exit_code = all_passed(report.checks) ? 0 : 1;
  std::string artifact;
  switch (format_) {
    case Format::Json: artifact = report.to_json().dump(2) + "\n"; break;
    case Format::Dot: artifact = dot; break;
    case Format::Text:
      artifact = verb_ == Verb::Verify || !all_passed(report.checks) ? text + report.to_text() : text;
      break;
  }
  if (!out_.empty()) {
    std::ofstream file(out_, std::ios::binary);
    if (!file || !(file << artifact)) {
      throw Error(ErrorCode::Io, "cannot write '" + out_ + "'");
    }
  } else {
    result.output = std::move(artifact);
  }
  result.report = std::move(report);
  return result;
}

RunResult Command::run() const
{
  if (!batch_.empty()) {
    std::ifstream file(batch_);
    if (!file) {
      throw UsageError("batch", "cannot open '" + batch_ + "'");
    }
    return run_batch(file);
  }
  const auto start = std::chrono::steady_clock::now();
  Report report{std::string(kVersion), std::string(to_string(verb_)), inputs(), {}, 0.0};
  std::string text;
  std::string dot;
  if (verb_ == Verb::Verify) {
    report.checks = verify_checks();
  } else {
    if (!d_) {
      throw UsageError("d", "required for " + std::string(to_string(verb_)));
    }
    try {
      report.checks = checks_for(*d_, text, dot);
    } catch (const Error & e) {
      report.checks.push_back(
        Check::failed(d_->to_string(), nullptr, std::string(to_string(e.code())) + ": " + e.what()));
    }
  }
  report.elapsed_ms =
    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return finish(std::move(report), std::move(text), std::move(dot));
}

RunResult Command::run_batch(std::istream & input) const
{
  if (verb_ == Verb::Verify) {
    throw UsageError("batch", "verify does not take a batch file");
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t number = 1; std::getline(input, line); ++number) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    const auto last = line.find_last_not_of(" \t\r");
    lines.emplace_back(number, line.substr(first, last - first + 1));
  }
  struct Slot
  {
    CheckList checks;
    std::string text;
    std::string dot;
  };
  std::vector<Slot> slots(lines.size());
  parallel_for(lines.size(), jobs_, [&](std::size_t i) {
      const std::string name = "line " + std::to_string(lines[i].first) + ": " + lines[i].second;
      Slot & slot = slots[i];
      try {
        const DimensionVector d = DimensionVector::parse(lines[i].second);
        for (Check & c : checks_for(d, slot.text, slot.dot)) {
          slot.checks.push_back(std::move(c));
        }
      } catch (const Error & e) {
        slot.checks.push_back(Check::failed(name, nullptr, std::string(to_string(e.code())) + ": " + e.what()));
        slot.text += name + ": " + std::string(to_string(e.code())) + ": " + e.what() + "\n";
      }
    });
  Report report{std::string(kVersion), std::string(to_string(verb_)), inputs(), {}, 0.0};
  std::string text;
  std::string dot;
  for (Slot & slot : slots) {
    report.checks.insert(report.checks.end(), slot.checks.begin(), slot.checks.end());
    text += slot.text;
    dot += slot.dot;
  }
  report.elapsed_ms =
    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return finish(std::move(report), std::move(text), std::move(dot));
}

}  // namespace nilrad
