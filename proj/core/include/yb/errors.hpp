#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace yb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPoint : public Error {
public:
    using Error::Error;
};

// The 1 - ... factor of a birational map vanished.
class SingularMap : public Error {
public:
    SingularMap(const std::string& what, std::complex<double> pivot)
        : Error(what), pivot_(pivot) {}
    std::complex<double> pivot() const { return pivot_; }

private:
    std::complex<double> pivot_;
};

class DegenerateSamples : public Error {
public:
    using Error::Error;
};

class IllConditioned : public Error {
public:
    IllConditioned(const std::string& what, double cond) : Error(what), cond_(cond) {}
    double condition() const { return cond_; }

private:
    double cond_;
};

class BranchAmbiguity : public Error {
public:
    using Error::Error;
};

class DimensionGuard : public Error {
public:
    using Error::Error;
};

class GenericityError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class EvolutionSingularity : public Error {
public:
    EvolutionSingularity(const std::string& what, int cell) : Error(what), cell_(cell) {}
    int cell() const { return cell_; }

private:
    int cell_;
};

class GridCellError : public Error {
public:
    GridCellError(const std::string& what, int x1, int x2) : Error(what), x1_(x1), x2_(x2) {}
    int x1() const { return x1_; }
    int x2() const { return x2_; }

private:
    int x1_, x2_;
};

class DegenerateSolution : public GridCellError {
public:
    using GridCellError::GridCellError;
};

class PoleOfSolution : public GridCellError {
public:
    using GridCellError::GridCellError;
};

}  // namespace yb
