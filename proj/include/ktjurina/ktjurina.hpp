#pragma once

#include "corpus.hpp"
#include "error.hpp"
#include "gradedlin.hpp"
#include "invariants.hpp"
#include "koszul.hpp"
#include "linalg.hpp"
#include "parse.hpp"
#include "report.hpp"
#include "series.hpp"
#include "wpoly.hpp"
