# make this directory a component
