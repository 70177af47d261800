#pragma once

#include "kldn/circles.hpp"
#include "kldn/cups.hpp"
#include "kldn/hecke.hpp"
#include "kldn/laurent.hpp"
#include "kldn/linalg.hpp"
#include "kldn/render.hpp"
#include "kldn/serialize.hpp"
#include "kldn/tangles.hpp"
#include "kldn/verify.hpp"
#include "kldn/weyl.hpp"
