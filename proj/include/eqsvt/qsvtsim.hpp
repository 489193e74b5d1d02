#pragma once

#include "eqsvt/qsvtsim/block_encoding.hpp"
#include "eqsvt/qsvtsim/circuit.hpp"
#include "eqsvt/qsvtsim/evt.hpp"
#include "eqsvt/qsvtsim/fpaa.hpp"
#include "eqsvt/qsvtsim/kernels.hpp"
#include "eqsvt/qsvtsim/qsp.hpp"
#include "eqsvt/qsvtsim/statevector.hpp"
#include "eqsvt/qsvtsim/thermal.hpp"
