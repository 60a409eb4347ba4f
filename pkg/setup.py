import setuptools

setuptools.setup(name="equilevel", packages=setuptools.find_packages(include=["equilevel", "equilevel.*"]), python_requires=">=3.11", install_requires=[
    "Click", "Jinja2", "qtoml", "numpy"])
