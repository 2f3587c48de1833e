#pragma once

#include "linkvol/braid.hpp"
#include "linkvol/case_analysis.hpp"
#include "linkvol/covers.hpp"
#include "linkvol/diophantine.hpp"
#include "linkvol/error.hpp"
#include "linkvol/int_matrix.hpp"
#include "linkvol/montesinos.hpp"
#include "linkvol/orbifold.hpp"
#include "linkvol/prism_verify.hpp"
#include "linkvol/rational.hpp"
#include "linkvol/seifert.hpp"
#include "linkvol/slopes.hpp"
#include "linkvol/smith.hpp"
#include "linkvol/volume.hpp"
