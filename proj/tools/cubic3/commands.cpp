#include "commands.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cubic3/admissibility.hpp"
#include "cubic3/construct.hpp"
#include "cubic3/oracle.hpp"
#include "cubic3/representations.hpp"
#include "cubic3/trinomials.hpp"

namespace cubic3::cli {

namespace {

const char* curve_token(Curve c) { return c == Curve::Three ? "3" : "27"; }

// One output record with a fixed field order; values are decimal integers,
// bare tokens, or null. CSV leaves nulls empty.
class Record {
 public:
  Record& num(const char* key, i64 v) {
    fields_.emplace_back(key, std::to_string(v), false);
    return *this;
  }
  Record& str(const char* key, std::string v) {
    fields_.emplace_back(key, std::move(v), true);
    return *this;
  }
  Record& boolean(const char* key, bool v) {
    fields_.emplace_back(key, v ? "true" : "false", false);
    return *this;
  }
  Record& null(const char* key) {
    fields_.emplace_back(key, "", false);
    return *this;
  }

  void write_jsonl(std::ostream& out) const {
    out << '{';
    bool first = true;
    for (const auto& [k, v, quoted] : fields_) {
      if (!first) out << ',';
      first = false;
      out << '"' << k << "\":";
      if (v.empty() && !quoted)
        out << "null";
      else if (quoted)
        out << nlohmann::json(v).dump();
      else
        out << v;
    }
    out << "}\n";
  }

  void write_csv_header(std::ostream& out) const {
    bool first = true;
    for (const auto& [k, v, quoted] : fields_) {
      if (!first) out << ',';
      first = false;
      out << k;
    }
    out << '\n';
  }

  void write_csv(std::ostream& out) const {
    bool first = true;
    for (const auto& [k, v, quoted] : fields_) {
      if (!first) out << ',';
      first = false;
      out << v;
    }
    out << '\n';
  }

 private:
  std::vector<std::tuple<std::string, std::string, bool>> fields_;
};

void write_all(const std::vector<Record>& records, Format fmt, std::ostream& out) {
  if (fmt == Format::Csv && !records.empty()) records.front().write_csv_header(out);
  for (const Record& r : records) {
    if (fmt == Format::Csv)
      r.write_csv(out);
    else
      r.write_jsonl(out);
  }
}

Record point_record(const CurvePoint& p) {
  Record r;
  r.num("x", p.x).num("y", p.y).num("z", p.z).str("curve", curve_token(p.curve));
  r.num("level", p.level);
  return r;
}

std::vector<CurvePoint> sorted_points(const PointSet& set) {
  std::vector<CurvePoint> v(set.begin(), set.end());
  std::sort(v.begin(), v.end(), [](const CurvePoint& a, const CurvePoint& b) {
    return std::tuple(a.z, a.x, a.y) < std::tuple(b.z, b.x, b.y);
  });
  return v;
}

}  // namespace

bool parse_set_kind(const std::string& name, SetKind& kind) {
  for (SetKind k : {SetKind::X1D, SetKind::X1D_STAR, SetKind::XD1, SetKind::XD1_STAR,
                    SetKind::YD1, SetKind::YD1_STAR}) {
    if (name == set_kind_name(k)) {
      kind = k;
      return true;
    }
  }
  return false;
}

const char* set_kind_name(SetKind kind) {
  switch (kind) {
    case SetKind::X1D: return "X1D";
    case SetKind::X1D_STAR: return "X1D_STAR";
    case SetKind::XD1: return "XD1";
    case SetKind::XD1_STAR: return "XD1_STAR";
    case SetKind::YD1: return "YD1";
    case SetKind::YD1_STAR: return "YD1_STAR";
  }
  return "?";
}

int cmd_represent(i64 n, Format fmt, std::ostream& out, std::ostream& err) {
  if (n < 1) {
    err << "represent: N must be >= 1\n";
    return kExitUsage;
  }
  std::vector<Record> records;
  for (const Representation& r : represent_u3v(n).reps) {
    Record rec;
    rec.num("u", r.u).num("v", r.v).num("N", r.n);
    records.push_back(std::move(rec));
  }
  write_all(records, fmt, out);
  return kExitOk;
}

int cmd_admissible(i64 max, Format fmt, std::ostream& out, std::ostream& err) {
  if (max < 1) {
    err << "admissible: --max must be >= 1\n";
    return kExitUsage;
  }
  std::vector<Record> records;
  for (const AdmissibleD& a : admissible_up_to(max)) {
    Record rec;
    rec.num("D", a.d).num("D1", a.d1).boolean("has9", a.has9);
    records.push_back(std::move(rec));
  }
  write_all(records, fmt, out);
  return kExitOk;
}

int cmd_points(i64 d, SetKind kind, i64 z_max, Format fmt, std::ostream& out,
               std::ostream& err) {
  PointSet set;
  try {
    set = constructed_set(kind, d, z_max);
  } catch (const std::invalid_argument& e) {
    err << "points: " << e.what() << '\n';
    return kExitUsage;
  }
  std::vector<Record> records;
  for (const CurvePoint& p : sorted_points(set)) records.push_back(point_record(p));
  write_all(records, fmt, out);
  return kExitOk;
}

int cmd_trinomials(i64 d, i64 st_max, Format fmt, std::ostream& out, std::ostream& err) {
  if (d < 1 || st_max < 1) {
    err << "trinomials: --D and --st-max must be >= 1\n";
    return kExitUsage;
  }
  const EmitResult result = emit(d, st_max);
  if (!result.admissible) {
    err << "trinomials: D = " << d << " is not admissible: " << non_admissible_reason(d)
        << "; no such gcd class exists\n";
    return kExitUsage;
  }
  std::vector<Record> records;
  for (const Emission& e : result.entries) {
    Record rec;
    rec.num("a", e.tri.a).num("b", e.tri.b).num("c", e.tri.c).num("D", e.tri.d);
    rec.str("family", family_name(e.tag.family));
    rec.num("j", e.tag.j).num("sign", e.tag.sign).num("s", e.tag.s).num("t", e.tag.t);
    records.push_back(std::move(rec));
  }
  write_all(records, fmt, out);
  return kExitOk;
}

int cmd_verify(std::istream& in, Format fmt, std::ostream& out, std::ostream& err) {
  std::vector<Record> records;
  bool all_ok = true;
  std::string line;
  i64 line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    i64 a = 0, b = 0;
    try {
      const auto j = nlohmann::json::parse(line);
      if (!j.is_object() || !j.contains("a") || !j.contains("b") ||
          !j["a"].is_number_integer() || !j["b"].is_number_integer())
        throw std::invalid_argument("record must be an object with integer a and b");
      a = j["a"].get<i64>();
      b = j["b"].get<i64>();
    } catch (const std::exception& e) {
      all_ok = false;
      Record rec;
      rec.num("line", line_no).boolean("cyclic_cubic", false).str("error", e.what());
      records.push_back(std::move(rec));
      continue;
    }
    Classification c;
    try {
      c = classify(a, b);
    } catch (const std::overflow_error& e) {
      all_ok = false;
      Record rec;
      rec.num("line", line_no).boolean("cyclic_cubic", false).str("error", e.what());
      records.push_back(std::move(rec));
      continue;
    }
    Record rec;
    rec.num("a", a).num("b", b).boolean("cyclic_cubic", c.cyclic_cubic);
    rec.str("reason", c.cyclic_cubic ? "" : c.reason);
    if (c.canonical) {
      rec.num("canonical_a", c.canonical->tri.a).num("canonical_b", c.canonical->tri.b);
      rec.num("canonical_c", c.canonical->tri.c).num("canonical_D", c.canonical->tri.d);
    } else {
      rec.null("canonical_a").null("canonical_b").null("canonical_c").null("canonical_D");
    }
    if (c.tag) {
      rec.str("family", family_name(c.tag->family));
      rec.num("j", c.tag->j).num("sign", c.tag->sign).num("s", c.tag->s).num("t", c.tag->t);
    } else {
      rec.null("family").null("j").null("sign").null("s").null("t");
    }
    rec.str("provenance",
            c.tag ? "found" : (c.provenance_inconclusive ? "inconclusive" : "none"));
    records.push_back(std::move(rec));
    if (!c.cyclic_cubic) all_ok = false;
  }
  write_all(records, fmt, out);
  if (!all_ok) err << "verify: some records failed\n";
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_oracle(i64 d, SetKind kind, i64 z_max, Format fmt, std::ostream& out,
               std::ostream& err) {
  PointSet constructed;
  try {
    constructed = constructed_set(kind, d, z_max);
  } catch (const std::invalid_argument& e) {
    err << "oracle: " << e.what() << '\n';
    return kExitUsage;
  }
  const OracleReport rep = compare(kind, d, z_max, constructed);
  std::vector<Record> records;
  {
    Record rec;
    rec.str("kind", set_kind_name(kind)).num("D", d).num("zmax", z_max);
    rec.num("constructed", static_cast<i64>(rep.constructed_count));
    rec.num("oracle", static_cast<i64>(rep.oracle_count));
    rec.num("missing", static_cast<i64>(rep.missing.size()));
    rec.num("extra", static_cast<i64>(rep.extra.size()));
    records.push_back(std::move(rec));
  }
  write_all(records, fmt, out);
  // Diff points go to stderr so the summary stream stays schema-stable.
  for (const CurvePoint& p : rep.missing)
    err << "missing: (" << p.x << ',' << p.y << ',' << p.z << ")\n";
  for (const CurvePoint& p : rep.extra)
    err << "extra: (" << p.x << ',' << p.y << ',' << p.z << ")\n";
  return rep.clean() ? kExitOk : kExitMismatch;
}

}  // namespace cubic3::cli
