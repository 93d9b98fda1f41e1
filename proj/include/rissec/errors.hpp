//---------------------------------------------------------------------------//
//! \file rissec/errors.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace rissec
{
//! Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! Operation called in the wrong antenna mode (single vs. multi).
class ModeError : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

//! Effective channel vanished, so no beamformer direction exists.
class DegenerateChannelError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace rissec
