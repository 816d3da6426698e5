#pragma once

#include <stdexcept>
#include <string>

namespace smtk {

// Every failure raised by the toolkit derives from Error. Failures that stem
// from an exhausted budget or an undecided oracle query derive from
// Inconclusive so that callers can tell "don't know" apart from "wrong".
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Inconclusive : public Error {
 public:
  using Error::Error;
};

#define SMTK_DEFINE_ERROR(Name, Base)                                   \
  class Name : public Base {                                            \
   public:                                                              \
    explicit Name(const std::string& what) : Base(#Name ": " + what) {} \
  };

SMTK_DEFINE_ERROR(AlphabetMismatch, Error)
SMTK_DEFINE_ERROR(SyntaxError, Error)
SMTK_DEFINE_ERROR(NonSpecialRelator, Error)
SMTK_DEFINE_ERROR(NonInvertibleInput, Error)
SMTK_DEFINE_ERROR(NoCuttingWord, Error)
SMTK_DEFINE_ERROR(NoContainingInvertible, Error)
SMTK_DEFINE_ERROR(NotCollapsedEdge, Error)
SMTK_DEFINE_ERROR(UnclassifiedEdges, Inconclusive)
SMTK_DEFINE_ERROR(NotAForest, Error)
SMTK_DEFINE_ERROR(NotOneRelator, Error)
SMTK_DEFINE_ERROR(OracleInconclusive, Inconclusive)
SMTK_DEFINE_ERROR(PartialDelta, Inconclusive)

#undef SMTK_DEFINE_ERROR

}  // namespace smtk
