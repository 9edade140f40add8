#pragma once

#include "tribuild/types.hpp"
#include "tribuild/projective_plane.hpp"
#include "tribuild/presentation.hpp"
#include "tribuild/group_words.hpp"
#include "tribuild/lattice.hpp"
#include "tribuild/building_local.hpp"
#include "tribuild/labels.hpp"
#include "tribuild/sector_geometry.hpp"
#include "tribuild/apartment.hpp"
#include "tribuild/ck_subshift.hpp"
#include "tribuild/io.hpp"
#include "tribuild/verify.hpp"
