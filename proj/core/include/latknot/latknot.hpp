#pragma once

#include "latknot/certificate_io.hpp"
#include "latknot/elevation.hpp"
#include "latknot/geometry.hpp"
#include "latknot/moves.hpp"
#include "latknot/search.hpp"
#include "latknot/word.hpp"
