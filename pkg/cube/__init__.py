from cube.generators import CubeObject, Generator, connection, degeneracy, face, format_word, parse_word
from cube.box_morphism import (
    BoxMorphism, NotInBox, compose, enumerate_box_morphisms, from_word, identity,
    normal_form, product, underlying_function,
)
