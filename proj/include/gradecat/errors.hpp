#ifndef GRADECAT_ERRORS_HPP
#define GRADECAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gradecat {

/* Every failure the library can diagnose carries one of these codes plus a
 * human-readable witness message.  CLI exit codes: a thrown Error with
 * ErrCode::Usage or ErrCode::Schema maps to 2, everything else to 1. */
enum class ErrCode {
  NonAdmissible,      // relation with a term of path length < 2, or bad endpoints
  BadBound,           // truncation bound missing/invalid, or a length-N path escapes the ideal
  NotComposable,      // endpoint mismatch in a composition
  NotFunctorial,      // functor data violates identity/composition laws
  DimensionMismatch,  // matrix shape disagrees with a hom-space dimension
  SingularBaseChange, // base-change matrix not invertible
  InvalidGrading,     // degree decomposition violates composition compatibility
  NotConcatenable,    // walk steps fail to chain source-to-target
  UnknownBasisRef,    // walk references a basis element that does not exist
  NotHomogeneous,     // functor image of a homogeneous element mixes degrees
  NotBasisAligned,    // homogeneous image not a scalar multiple of a single basis element
  NotSurjective,      // quotient map misses part of the target group
  DegreeOutsideImage, // degree not in the closed-walk subgroup during restriction
  Disconnected,       // underlying graph not connected
  InfiniteGroup,      // finite group required (smash construction, enumeration)
  GroupTooLarge,      // enumeration would exceed the assignment cap
  TooManyPaths,       // homogeneity partition beyond its hom-space size cap
  NotThin,            // thin enumeration on a grading with a component of dim > 1
  NotSG,              // category not generated by its Schurian morphisms
  NotConstricted,     // an arrow has a strictly parallel path surviving the ideal
  NotConnectedResult, // constructed grading unexpectedly fails connectedness
  SquareFails,        // grading-morphism diagram fails on a generator walk
  DiagramFails,       // covering-morphism diagram GH = JF fails
  NotEquivariant,     // no group element satisfies deck equivariance
  NoSolution,         // integer/linear system admits no solution
  Schema,             // malformed model/grading/walk JSON
  Usage,              // bad CLI invocation or unresolved model parameter
};

const char* errcode_name(ErrCode c);

struct Error : std::runtime_error {
  ErrCode code;
  Error(ErrCode c, const std::string& msg)
      : std::runtime_error(std::string(errcode_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(ErrCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace gradecat

#endif
