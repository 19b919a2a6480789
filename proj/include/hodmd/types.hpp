#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace hodmd {

using Index = Eigen::Index;
using Complex = std::complex<double>;

// Dense numeric containers used throughout the pipeline. Snapshot and
// factor matrices are double precision; everything spectral is complex.
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Base of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Validation family: bad arguments, malformed files, contract violations.
// The CLI maps these to exit code 2.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Numerical family: a kernel or iteration failed on valid input.
// The CLI maps these to exit code 3.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

class NonUniformSampling : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class InsufficientData : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class InvalidEmbeddingDepth : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class DegenerateSpectrum : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class InvalidRank : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class UnsupportedModelVersion : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class ParseError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class UnknownPreset : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class ZeroReference : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class IllConditionedTruncation : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

class GrowthOverflow : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

class SingularSystem : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

class NewtonDivergence : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

}  // namespace hodmd
