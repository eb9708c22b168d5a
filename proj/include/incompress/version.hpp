#ifndef INCOMPRESS_VERSION_HPP
#define INCOMPRESS_VERSION_HPP

#define INCOMPRESS_VERSION "0.1.0"

#endif
