// Copyright 2026 The namedis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string_view>

#include "namedis/names.h"

namespace namedis {
namespace {

// nickname<TAB>full first name
constexpr std::string_view kBundledNicknames = R"tsv(abby	abigail
abe	abraham
al	albert
al	alfred
al	alexander
alex	alexander
alex	alexandra
andy	andrew
andy	andreas
ann	anna
annie	anne
art	arthur
barb	barbara
ben	benjamin
bert	albert
bert	herbert
beth	elizabeth
betty	elizabeth
bill	william
billy	william
bob	robert
bobby	robert
brad	bradley
cal	calvin
cathy	catherine
chad	charles
charlie	charles
chris	christopher
chris	christian
chris	christine
chuck	charles
cindy	cynthia
cliff	clifford
dan	daniel
danny	daniel
dave	david
davy	david
deb	deborah
debbie	deborah
dick	richard
don	donald
doug	douglas
ed	edward
ed	edwin
eddie	edward
ella	eleanor
ellie	eleanor
fred	frederick
fred	alfred
frank	francis
frank	franklin
gabe	gabriel
gene	eugene
greg	gregory
hank	henry
harry	henry
jack	john
jake	jacob
jan	janet
jeff	jeffrey
jen	jennifer
jenny	jennifer
jerry	gerald
jerry	jeremiah
jim	james
jimmy	james
jo	joanna
joe	joseph
joey	joseph
johnny	john
jon	jonathan
josh	joshua
judy	judith
kate	katherine
kathy	katherine
katie	katherine
ken	kenneth
kenny	kenneth
kim	kimberly
larry	lawrence
leo	leonard
les	leslie
liz	elizabeth
lou	louis
maggie	margaret
marge	margaret
matt	matthew
max	maximilian
meg	margaret
mike	michael
mickey	michael
mitch	mitchell
nan	nancy
nat	nathaniel
nate	nathan
ned	edward
nick	nicholas
nicky	nicholas
pam	pamela
pat	patrick
pat	patricia
patty	patricia
peg	margaret
peggy	margaret
pete	peter
phil	philip
ray	raymond
rick	richard
ricky	richard
rob	robert
robbie	robert
ron	ronald
ronnie	ronald
rose	rosemary
sam	samuel
sam	samantha
sandy	sandra
steve	stephen
steve	steven
stu	stuart
sue	susan
susie	susan
ted	theodore
ted	edward
terry	terence
theo	theodore
tim	timothy
tom	thomas
tommy	thomas
tony	anthony
trish	patricia
val	valerie
vic	victor
vince	vincent
walt	walter
will	william
willy	william
zach	zachary
zack	zachary
zak	zakaria
zeke	ezekiel
)tsv";

}  // namespace

const NicknameTable& NicknameTable::bundled() {
  static const NicknameTable table = NicknameTable::parse(kBundledNicknames);
  return table;
}

}  // namespace namedis
