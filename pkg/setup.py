import setuptools


setuptools.setup(name='POIMsparql',
      version="1.0.0",
      description='Categorical semantics for basic RDF CONSTRUCT and SELECT queries: pushout + image transformation.',
      packages=setuptools.find_packages(exclude=["tests", "examples", "examples.*"]),
      package_data={"POIMsparql": ["templates/*.txt"]},
      python_requires=">=3.7",
      install_requires=["PyYAML", "pytest", "hypothesis", "flake8"],
      entry_points={"console_scripts": ["poim = POIMsparql.evaluate:main"]},
      classifiers=[
       "Programming Language :: Python :: 3",
       "License :: OSI Approved :: MIT License",
       "Operating System :: OS Independent",
       ],
     )
