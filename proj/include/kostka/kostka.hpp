#pragma once

#include "kostka/rational.hpp"
#include "kostka/exactla.hpp"
#include "kostka/rootsys.hpp"
#include "kostka/weyl.hpp"
#include "kostka/cone.hpp"
#include "kostka/levi.hpp"
#include "kostka/oracle.hpp"
