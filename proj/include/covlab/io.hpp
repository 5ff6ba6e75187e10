#pragma once

#include <map>
#include <memory>
#include <string>

#include "json.hpp"

#include "covlab/cohomology.hpp"
#include "covlab/covariance.hpp"
#include "covlab/covering.hpp"
#include "covlab/multiplet.hpp"

namespace covlab::io {

using json = nlohmann::json;

/// A group as loaded, with the relabeling applied on ingestion: a table whose
/// identity sits at index e has elements 0 and e swapped, and every element
/// reference to that group in the same document is swapped the same way.
struct LoadedGroup {
  fingroup::GroupTable table;
  int original_identity = 0;

  int relabel(int x) const {
    if (x == 0) return original_identity;
    if (x == original_identity) return 0;
    return x;
  }
};

struct LoadedSection {
  std::string cover;
  covering::Section section;
};

struct LoadedImplementation {
  std::string model;
  covariance::Implementation impl;
};

/// Every object of an input file, keyed by id. References between records use
/// ids from the same file; group references also accept built-in names
/// ("Z4", "Q8", ...) and cover references "Q8->Z2xZ2" and the like.
struct Document {
  std::map<std::string, LoadedGroup> groups;
  std::map<std::string, std::shared_ptr<const covariance::FinCat>> categories;
  std::map<std::string, cohomology::Cochain2> cochains;
  std::map<std::string, multiplet::MatrixRep> reps;
  std::map<std::string, covering::CentralCover> covers;
  std::map<std::string, LoadedSection> sections;
  std::map<std::string, covariance::CovarianceModel> models;
  std::map<std::string, LoadedImplementation> implementations;
  std::map<std::string, multiplet::FieldSpaceAction> field_actions;
  std::map<std::string, multiplet::Submultiplet> submultiplets;
  std::string digest;  // FNV-1a of the raw bytes

  // Relabelings of the groups referenced by each record, for records that
  // refer to elements of a group loaded elsewhere.
  std::map<std::string, LoadedGroup> model_groups;
  std::map<std::string, LoadedGroup> cochain_groups;
  std::map<std::string, std::pair<LoadedGroup, LoadedGroup>> cover_groups;  // (S, L)
};

/// Throws Error{ParseError} with witness (line, column) for malformed JSON and
/// Error{SchemaError} whose detail is the offending field name. Module
/// validation errors (NotAssociative, InvalidCategory, ...) pass through.
Document parse_document(const std::string& text);
/// Reads a file, or standard input for "-".
Document load_document(const std::string& path);

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Resolves a group reference: document id first, then built-in name.
std::optional<fingroup::GroupTable> resolve_group(const Document& doc, const std::string& ref);

json group_json(const fingroup::GroupTable& g);
json cochain_json(const cohomology::Cochain2& c);
json scalar_json(const linalg::Scalar& s);
json matrix_json(const linalg::Matrix& m);
json rep_json(const multiplet::MatrixRep& r);
json verdict_json(const Verdict& v);
json wick_json(const wick::WickPoly& p);

}  // namespace covlab::io
