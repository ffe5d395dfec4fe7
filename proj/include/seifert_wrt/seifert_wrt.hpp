#ifndef SEIFERT_WRT_SEIFERT_WRT_HPP
#define SEIFERT_WRT_SEIFERT_WRT_HPP

#include "asymptotic.hpp"
#include "eichler.hpp"
#include "exactmath.hpp"
#include "modular.hpp"
#include "periodic.hpp"
#include "precision.hpp"
#include "report.hpp"
#include "seifert.hpp"
#include "topology.hpp"
#include "verify.hpp"
#include "wrt.hpp"

#endif
