// Line-oriented records for the command line front end.
#pragma once

#include "surfres/bounds.hpp"
#include "surfres/newton.hpp"
#include "surfres/prepare.hpp"
#include "surfres/resolve.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace surfres {

using FieldValue = std::variant<std::string, std::int64_t, bool, std::vector<std::string>>;

struct Field {
  std::string key;
  FieldValue value;
};

/// A named group of fields. Human output prints "name.key: value" (just
/// "key: value" for an unnamed record); machine output prints one JSON object
/// per record.
struct Record {
  std::string name;
  std::vector<Field> fields;

  Record& add(std::string key, FieldValue value) {
    fields.push_back({std::move(key), std::move(value)});
    return *this;
  }
};

std::vector<std::string> to_strings(const std::vector<Point2>& pts);

Record equation_record(const Surface& s);
Record polygon_record(std::string name, const Staircase& st);
Record witness_record(unsigned k, const GQWitness& w);
Record preparation_record(const PreparationReport& rep);
Record trace_record(const Trace& t);
Record step_record(std::size_t index, const TraceStep& st);
Record bounds_record(const BoundReport& rep);

/// "key: value" lines; vectors are space separated, bools are true/false.
std::string render_human(const std::vector<Record>& records);

}  // namespace surfres
