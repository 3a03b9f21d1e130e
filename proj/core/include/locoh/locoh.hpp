#pragma once

#include "locoh/chain.hpp"
#include "locoh/duality.hpp"
#include "locoh/errors.hpp"
#include "locoh/exactla.hpp"
#include "locoh/gmod.hpp"
#include "locoh/gring.hpp"
#include "locoh/koszul.hpp"
#include "locoh/localdh.hpp"
#include "locoh/prosys.hpp"
