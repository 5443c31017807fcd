#pragma once

#include "vahlen/ring.hpp"
#include "vahlen/qspace.hpp"
#include "vahlen/clifford.hpp"
#include "vahlen/literals.hpp"
#include "vahlen/cgroups.hpp"
#include "vahlen/vahlen.hpp"
#include "vahlen/paravector.hpp"
#include "vahlen/isomap.hpp"
#include "vahlen/config.hpp"
#include "vahlen/verify.hpp"
