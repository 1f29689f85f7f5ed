#pragma once
// JSON documents: Lie algebras, Artin algebras, modules, morphisms,
// representations, deformations and functor suites. File references inside a
// document are paths relative to the referencing file.
//
// Errors carry a JSON path ("/brackets/2/value/0"). Unknown keys are
// rejected unless the options are lax.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lieforge/artin.hpp"
#include "lieforge/ce_cohomology.hpp"
#include "lieforge/deformation.hpp"
#include "lieforge/error.hpp"
#include "lieforge/rep_deform.hpp"
#include "lieforge/schlessinger.hpp"

namespace lieforge {

class ParseError : public Error {
 public:
  // `mathematical` separates well-formed documents describing an invalid
  // object (Jacobi, grading, ...) from syntax and schema errors.
  ParseError(std::string file, std::string path, const std::string& message, bool mathematical = false);
  const std::string& file() const { return file_; }
  const std::string& path() const { return path_; }
  bool mathematical() const { return mathematical_; }

 private:
  std::string file_;
  std::string path_;
  bool mathematical_;
};

struct ParseOptions {
  bool strict = true;
};

struct FunctorSuite {
  std::shared_ptr<const TestCategory> category;
  std::vector<OraclePtr> functors;
};

struct Document {
  std::string kind;
  LiePtr lie;
  ArtinPtr artin;
  ModulePtr module;
  std::optional<GradedMorphism> morphism;
  std::optional<ArtinMorphism> artin_morphism;
  RepPtr rep;
  std::optional<LieDeformation> deformation;
  std::optional<FunctorSuite> suite;
};

Document parse_document(const std::string& text, const std::filesystem::path& dir, const ParseOptions& options = {},
                        const std::string& file = "<input>");
Document load_document(const std::filesystem::path& path, const ParseOptions& options = {});

// Pretty-printed JSON, two-space indent, trailing newline.
std::string serialize_lie(const GradedLieAlgebra& l);
std::string serialize_artin(const ArtinLocalAlgebra& a);

}  // namespace lieforge
