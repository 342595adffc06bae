// Umbrella header.
#ifndef EPSMAC_EPSMAC_HPP
#define EPSMAC_EPSMAC_HPP

#include "epsmac/characters.hpp"
#include "epsmac/field.hpp"
#include "epsmac/inner.hpp"
#include "epsmac/kernel.hpp"
#include "epsmac/laurent.hpp"
#include "epsmac/macdonald.hpp"
#include "epsmac/parallel.hpp"
#include "epsmac/rootsys.hpp"
#include "epsmac/serialize.hpp"
#include "epsmac/verify.hpp"
#include "epsmac/weyl_group.hpp"

#endif  // EPSMAC_EPSMAC_HPP
