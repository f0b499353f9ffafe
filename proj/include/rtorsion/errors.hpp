// Error types shared by all rtorsion modules.
//
// Domain errors describe mathematically invalid inputs (a non-square matrix
// handed to a determinant, a map that is not a boundary, ...).  Parse errors
// describe malformed serialized inputs and carry a byte offset when the
// underlying JSON parser reports one.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtorsion {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    // Stable machine-readable identifier, e.g. "NotAComplex".
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Well-formed input whose mathematical content is invalid.  CLI exit code 1.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed serialized input.  CLI exit code 2.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::ptrdiff_t byte_offset = -1)
        : Error("ParseError", message), byte_offset_(byte_offset) {}

    // Byte offset of the first offending byte, or -1 when unknown.
    std::ptrdiff_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::ptrdiff_t byte_offset_;
};

class NonSquare : public DomainError {
public:
    NonSquare(std::size_t rows, std::size_t cols)
        : DomainError("NonSquare", "matrix is not square: " + std::to_string(rows) + "x" +
                                       std::to_string(cols)) {}
};

class SingularMatrix : public DomainError {
public:
    explicit SingularMatrix(const std::string& message)
        : DomainError("SingularMatrix", message) {}
};

class NotInImage : public DomainError {
public:
    NotInImage() : DomainError("NotInImage", "vector does not lie in the column space") {}
};

class ShapeMismatch : public DomainError {
public:
    explicit ShapeMismatch(const std::string& message)
        : DomainError("ShapeMismatch", message) {}
};

class NotAComplex : public DomainError {
public:
    explicit NotAComplex(std::size_t degree)
        : DomainError("NotAComplex", "boundary composite is nonzero out of degree " +
                                         std::to_string(degree)),
          degree_(degree) {}

    // Degree i such that d_{i-1} . d_i != 0.
    std::size_t degree() const noexcept { return degree_; }

private:
    std::size_t degree_;
};

class MissingHomologyBasis : public DomainError {
public:
    MissingHomologyBasis()
        : DomainError("MissingHomologyBasis",
                      "complex is not acyclic and no homology basis was supplied") {}
};

class BadHomologyBasis : public DomainError {
public:
    explicit BadHomologyBasis(const std::string& message)
        : DomainError("BadHomologyBasis", message) {}
};

class IndependenceViolated : public DomainError {
public:
    IndependenceViolated(const std::string& first, const std::string& second)
        : DomainError("IndependenceViolated",
                      "torsion magnitude changed under a re-choice of bases: " + first +
                          " vs " + second),
          first_(first),
          second_(second) {}

    const std::string& first_value() const noexcept { return first_; }
    const std::string& second_value() const noexcept { return second_; }

private:
    std::string first_;
    std::string second_;
};

class GenusMismatch : public DomainError {
public:
    GenusMismatch(std::size_t a, std::size_t b)
        : DomainError("GenusMismatch", "exterior classes have different genus: " +
                                           std::to_string(a) + " vs " + std::to_string(b)) {}
};

class NonNilpotentInput : public DomainError {
public:
    NonNilpotentInput()
        : DomainError("NonNilpotentInput",
                      "exterior exponential requires a class with no degree-0 part") {}
};

class RelatorNotKilled : public DomainError {
public:
    explicit RelatorNotKilled(std::size_t relator_index)
        : DomainError("RelatorNotKilled", "representation does not map relator " +
                                              std::to_string(relator_index) + " to the identity"),
          relator_index_(relator_index) {}

    std::size_t relator_index() const noexcept { return relator_index_; }

private:
    std::size_t relator_index_;
};

class NotAComplexAfterSpecialization : public DomainError {
public:
    explicit NotAComplexAfterSpecialization(std::size_t degree)
        : DomainError("NotAComplexAfterSpecialization",
                      "specialized boundary composite is nonzero out of degree " +
                          std::to_string(degree)),
          degree_(degree) {}

    std::size_t degree() const noexcept { return degree_; }

private:
    std::size_t degree_;
};

class SingularConjugator : public DomainError {
public:
    SingularConjugator()
        : DomainError("SingularConjugator", "conjugating matrix is not invertible") {}
};

class PresentationMismatch : public DomainError {
public:
    explicit PresentationMismatch(const std::string& message)
        : DomainError("PresentationMismatch", message) {}
};

class EulerDegreeZero : public DomainError {
public:
    EulerDegreeZero()
        : DomainError("EulerDegreeZero",
                      "operation requires a circle bundle of degree n >= 1") {}
};

}  // namespace rtorsion
