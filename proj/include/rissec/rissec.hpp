//---------------------------------------------------------------------------//
//! \file rissec/rissec.hpp
//! Umbrella header.
//---------------------------------------------------------------------------//
#pragma once

#include "analysis.hpp"
#include "channel.hpp"
#include "errors.hpp"
#include "experiment.hpp"
#include "geometry.hpp"
#include "montecarlo.hpp"
#include "params.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"
