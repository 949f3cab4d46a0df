# UI package: command line and text rendering
