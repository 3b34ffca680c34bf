#pragma once

namespace pezzo {

// Same content as data/rp2_welschinger.csv, loaded into every store by default.
inline constexpr const char* kRp2Fixture = R"csv(# Welschinger invariants W(d,l) of the real projective plane, d = 1..5, l conjugate pairs.
# Read off the degree-7 threefold table: the (2k+1;k) column equals
# (-1)^((k^2-k)/2) * W(k+1,l), so the (3;1), (5;2), (7;3) and (9;4) columns give d = 2..5.
space,c1,l,value
p2,1,0,1
p2,2,0,1
p2,2,1,1
p2,2,2,1
p2,3,0,8
p2,3,1,6
p2,3,2,4
p2,3,3,2
p2,4,0,240
p2,4,1,144
p2,4,2,80
p2,4,3,40
p2,4,4,16
p2,4,5,0
p2,5,0,18264
p2,5,1,9096
p2,5,2,4272
p2,5,3,1872
p2,5,4,744
p2,5,5,248
p2,5,6,64
)csv";

}  // namespace pezzo
