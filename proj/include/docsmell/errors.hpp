#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace docsmell {

// Base class for everything this library throws on bad input or misuse.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A JSONL line that is not a valid object of the expected shape.
class MalformedLine : public Error {
 public:
  MalformedLine(std::size_t line_no, const std::string& detail)
      : Error("line " + std::to_string(line_no) + ": " + detail), line_no_(line_no) {}
  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

// Two corpus units share an id.
class DuplicateId : public Error {
 public:
  explicit DuplicateId(const std::string& id) : Error("duplicate id: " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// Some units carry labels and others do not.
class MixedLabeling : public Error {
 public:
  MixedLabeling() : Error("corpus mixes labeled and unlabeled units") {}
};

// An HTML page with no recognizable method detail blocks.
class NoMethodBlocks : public Error {
 public:
  NoMethodBlocks() : Error("no method blocks found in document") {}
};

// A method detail block missing a required part (0-based block index).
class MalformedBlock : public Error {
 public:
  explicit MalformedBlock(std::size_t index)
      : Error("malformed method block at index " + std::to_string(index)), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// An operation that needs gold labels was given an unlabeled corpus.
class UnlabeledCorpus : public Error {
 public:
  UnlabeledCorpus() : Error("corpus has no labels") {}
};

// Text with no tokens where at least one is required.
class EmptyText : public Error {
 public:
  EmptyText() : Error("text contains no tokens") {}
};

// An empty sequence where at least one element is required.
class EmptyInput : public Error {
 public:
  EmptyInput() : Error("input is empty") {}
};

// A corpus with no units where at least one is required.
class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("corpus is empty") {}
};

// A standardizer used before fit.
class UnfittedStandardizer : public Error {
 public:
  UnfittedStandardizer() : Error("standardizer has not been fitted") {}
};

// A vector whose dimension does not match the model or feature space.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(got)) {}
};

// A training call with no instances.
class EmptyTrainingSet : public Error {
 public:
  EmptyTrainingSet() : Error("training set is empty") {}
};

// Not enough instances for the requested operation (folds, neighbors, ...).
class TooFewInstances : public Error {
 public:
  explicit TooFewInstances(const std::string& detail) : Error("too few instances: " + detail) {}
};

// Two parallel sequences of different length.
class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t a, std::size_t b)
      : Error("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

// A feature index outside the feature space.
class BadFeatureIndex : public Error {
 public:
  BadFeatureIndex(std::size_t index, std::size_t dimension)
      : Error("feature index " + std::to_string(index) + " out of range for dimension " +
              std::to_string(dimension)) {}
};

// A file that could not be opened or read.
class IoError : public Error {
 public:
  explicit IoError(const std::string& detail) : Error(detail) {}
};

}  // namespace docsmell
